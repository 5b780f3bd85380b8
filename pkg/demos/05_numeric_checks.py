"""Floating-point spot checks of the transformation laws.

The exact engine never touches floats; these checks evaluate the same
products numerically on the upper half plane and confirm the modular
transformation behaviour that the exact cusp computations rely on.
"""

from qlambert import numeric
from qlambert.level14 import GAMMA_CYCLE

print("full report at default tolerances:")
for name, row in numeric.numeric_report().items():
    flag = "ok" if row["passed"] else "FAIL"
    print(f"   {name:<20} deviation {row['deviation']:.3e}  {flag}")

print("\nindividual checks:")
print("   eta inversion:   ", numeric.check_eta_inversion())
print("   index transform: ", numeric.check_gen_eta_transform(14, 1, GAMMA_CYCLE))
print("   three-cycle:     ", numeric.check_index_cycle())
print("   16 = h1(at)h2(t):", numeric.check_eq41())

tau = 0.1 + 1.2j
print(f"\npointwise values at tau = {tau}:")
print("   eta(tau) =", numeric.eta_value(tau))
print("   z(tau)   =", numeric.eval_symbol("z", tau))
print("   f(tau)   =", numeric.eval_symbol("f", tau))
