"""Cusp data on Gamma_0(N): representatives, widths, and order tables.

The invariant order of a quotient at each cusp decides where it is
holomorphic; a weight-0 quotient whose only pole sits at infinity is
determined by finitely many expansion coefficients.
"""

from qlambert.constructors import EtaQuotient, GenEtaQuotient
from qlambert.gamma0 import cusp_set, eta_cusp_order, gen_eta_cusp_ord, psi
from qlambert.level14 import order_table

for n in (14, 28):
    table = cusp_set(n)
    print(f"cusps of Gamma_0({n}), widths summing to psi({n}) = {psi(n)}:")
    for cusp, width in table:
        print(f"   {str(cusp):>4}  width {width}")

print("\ninvariant orders of the three squared index-quotients:")
report = order_table("3.1")
print("   cusp ", "  ".join(report.columns))
for label, values in report.rows:
    print(f"   {label}:", "  ".join(str(v) for v in values))

print("\na weight-0 eta quotient has divisor degree zero:")
quot = EtaQuotient(14, {2: 4, 7: 2, 1: -2, 14: -4})
orders = {cusp: eta_cusp_order(quot, 14, cusp) for cusp in cusp_set(14).cusps}
for cusp, value in orders.items():
    print(f"   Ord at {str(cusp):>4} = {value}")
print("   total =", sum(orders.values()))

print("\nmixed-level orders: a level-28 quotient measured on Gamma_0(14):")
h2_inverse = GenEtaQuotient(28, {14: 2})  # index piece of the h-pair
for cusp in cusp_set(14).cusps:
    print(f"   Ord at {str(cusp):>4} = {gen_eta_cusp_ord(h2_inverse, 14, cusp)}")
