"""
Dashings as an affine system over Z_2
=====================================

A dashing marks edges so that every 2-colored 4-cycle has an odd number
of marked edges.  That is one linear equation per cycle, so the dashings
form an affine space.
"""

# %%
from adinkras.adinkra import (ValiseAdinkra, count_dashings, dashing_system, enumerate_dashings, flip_vertex,
                              validate_dashing)
from adinkras.census import dashing_multiplier
from adinkras.chromotopology import bipartition, build_from_code, coset_graph
from adinkras.codes import DoublyEvenCode, enumerate_doubly_even
from adinkras.oracle import brute_dashing_count

square = build_from_code(DoublyEvenCode.trivial(2))
system = dashing_system(square)
print(system.nvars, "unknowns,", system.nequations, "equation")
for d in enumerate_dashings(square):
    print(d.dash)

# %%
# Elimination, an exhaustive scan of edge assignments, and the closed form
# agree on every code of length at most 5.  The 5-cube has 80 edges; the
# scan there fixes edges one at a time and merges partial assignments
# that agree on the squares still open.
for n in range(1, 6):
    for k in range(n // 2 + 1):
        for code in enumerate_doubly_even(n, k):
            g = build_from_code(code)
            print(f"{str(code):28} edges={len(g.edges):3}  {count_dashings(g):>10}  "
                  f"{brute_dashing_count(g):>10}  {dashing_multiplier(n, k):>10}")

# %%
# Flipping every edge at one vertex maps dashings to dashings.
g = build_from_code(DoublyEvenCode.from_generators(4, ["1111"]))
d = next(enumerate_dashings(g))
for u in (0, 3, 5):
    d = flip_vertex(g, d, u)
print(validate_dashing(ValiseAdinkra(g, bipartition(g), d)).ok)

# %%
# {00, 11} is not doubly even.  Its coset graph has two vertices joined
# by two edges, and the single cycle equation reads 0 = 1.
bad = coset_graph(2, [0b11])
print(bad.edges, count_dashings(bad))
