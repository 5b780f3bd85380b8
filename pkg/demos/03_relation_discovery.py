"""Discover bivariate polynomial relations from q-expansions alone.

Two modular functions whose only poles sit at infinity, with coprime
pole orders m and n, satisfy a monic relation X^n - Y^m + lower terms.
The solver sets up the linear system exactly and re-checks the residual
through the full truncation, so a returned relation is never a fit.
"""

import time

from qlambert.constructors import gosper_symbols
from qlambert.relations import find_relation

order = 45
z = gosper_symbols("z", order)
g = gosper_symbols("g", order)
t = gosper_symbols("t", order)

print(f"expansions through {order} orders; poles: z^2 -> 5, g^2 -> 3, t -> 5")

start = time.monotonic()
relation = find_relation(z**2, g**2)
print(f"\nrelation between z^2 and g^2   ({time.monotonic() - start:.2f}s):")
print("  ", relation)

start = time.monotonic()
relation = find_relation(t, g**2)
print(f"\nrelation between t and g^2     ({time.monotonic() - start:.2f}s):")
print("  ", relation)

print("\ntoo small a window is detected, not papered over:")
try:
    find_relation(gosper_symbols("z", 12) ** 2, gosper_symbols("g", 12) ** 2)
except ArithmeticError as err:
    print("  ", err)
