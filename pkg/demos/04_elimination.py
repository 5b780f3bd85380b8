"""Eliminate a shared variable between two cubics and split the factors.

The resultant of the two defining cubics in Z is a polynomial in F and G
that factors as (the cubic actually satisfied by the series) times a
spurious cofactor; the series data picks out the true factor.
"""

import time

from qlambert.constructors import gosper_symbols
from qlambert.level14 import EQ37_FACTORS, K_POLY, THM12_CUBIC, eliminate
from qlambert.relations import vanishing_factor

start = time.monotonic()
result = eliminate()
elapsed = time.monotonic() - start

print(f"resultant computed and factored in {elapsed:.2f}s")
print("   raw resultant:", len(result["resultant"].coeffs), "terms")
print("   stripped scalar:", result["scalar"])
print("   cofactor matches the stored degree-16 polynomial:", result["cofactor_matches"])

print("\nthe cubic factor:")
print("  ", result["cubic"])

print("\nwhich factor vanishes on the actual series?")
z, g, f = (gosper_symbols(s, 40) for s in ("z", "g", "f"))
index = vanishing_factor(EQ37_FACTORS, {"Z": z, "G": g})
print("   degree-6 split at (z, g): factor", index, "vanishes")
index = vanishing_factor((THM12_CUBIC, K_POLY), {"F": f, "G": g})
print("   elimination split at (f, g): factor", index, "vanishes")
print("   (the cofactor K never vanishes on the series, so it is spurious)")
