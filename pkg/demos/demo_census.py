"""
Counting generator sets
=======================

How many sets of N signed permutation matrices of size d satisfy the
garden-algebra relations?  The answer factors into a code count, a
permutation factor and a dashing factor.
"""

# %%
# The code dimension k is fixed by 2d = 2^(N-k); sizes that are not a
# power of two admit nothing.
from math import factorial

from adinkras.census import census, code_dimension, dashing_multiplier

for n, d in [(4, 3), (4, 4), (6, 4), (8, 8)]:
    print(f"N={n} d={d}: k={code_dimension(n, d)}")

# %%
# The census.  ``codes`` is C(N, k), the number of doubly-even (N, k)
# codes; N = 4 and N = 8 use the closed form, other lengths fall back to
# exhaustive enumeration.
print(f"{'N':>2} {'d':>2} {'k':>2} {'codes':>6} {'unsigned':>9} {'signed':>14}  source")
for n, d in [(1, 1), (2, 2), (3, 4), (4, 4), (5, 8), (6, 4), (8, 8)]:
    r = census(n, d)
    print(f"{r.n:>2} {r.d:>2} {r.k!s:>2} {r.code_count:>6} {r.unsigned_classes:>9} {r.signed_classes:>14}"
          f"  {r.code_count_source}")

# %%
# The signed count is the unsigned one times the number of dashings of a
# single (N, k) chromotopology, 2^(2^(N-k) + k - 1).
for n, k in [(2, 0), (4, 1), (8, 4)]:
    print(f"dashings of an ({n},{k}) chromotopology: {dashing_multiplier(n, k)}")

# %%
# Ordered lists are N! times as many as sets.
r = census(8, 8)
print(r.to_json(lists=True))
assert r.to_json(lists=True)["signed_classes"] == r.signed_classes * factorial(8)
