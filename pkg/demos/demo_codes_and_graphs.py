"""
Doubly-even codes and their coset graphs
========================================

Every doubly-even code C of length N gives an N-regular, N-colored graph
on the cosets of C: color i joins v + C to v + e_i + C.
"""

# %%
# Codes are stored by their reduced row-echelon generators; words are
# strings with coordinate 1 on the left.
from adinkras.chromotopology import bipartition, build_from_code, to_dot, validate
from adinkras.codes import DoublyEvenCode, enumerate_doubly_even, gaborit_count, weight_distribution

e8 = DoublyEvenCode.from_generators(8, ["11110000", "00111100", "00001111", "01010101"])
print(e8)
print("weights:", weight_distribution(e8))

# %%
# Exhaustive enumeration agrees with the closed form.
for n in (4, 8):
    print(n, [sum(1 for _ in enumerate_doubly_even(n, k)) for k in range(n // 2 + 1)],
          [gaborit_count(n, k) for k in range(n // 2 + 1)])

# %%
# The (4,1) code {0000, 1111}: 8 cosets, each named by its smallest word.
(c41,) = enumerate_doubly_even(4, 1)
g = build_from_code(c41)
print([str(v) for v in g.vertices])
print(validate(g))

# %%
# The two ranks of the valise are the even- and odd-weight
# representatives.  ``to_dot`` gives Graphviz source.
ranking = bipartition(g)
print("rank 0:", [str(g.vertices[u]) for u in ranking.level(0)])
print("rank 1:", [str(g.vertices[u]) for u in ranking.level(1)])
print(to_dot(g, ranking).splitlines()[:6])

# %%
# E_8 gives a 16-vertex graph with 64 edges.
g8 = build_from_code(e8)
print(g8.order, len(g8.edges), validate(g8).ok)
