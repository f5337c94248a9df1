"""Shared fixtures: the GR(4,4) generator list and its row-ordered Adinkra."""

from adinkras import (BitWord, Chromotopology, Dashing, GeneratorList, RowOrderedValiseAdinkra,
                      SignedPermutationMatrix, ValiseAdinkra, bipartition)

GR44 = [
    [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]],
    [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]],
    [[0, 0, 0, 1], [0, 0, -1, 0], [0, -1, 0, 0], [1, 0, 0, 0]],
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]],
]

# left-to-right vertex order of each row of the drawing
TOP = ["0110", "0101", "0011", "0000"]
BOTTOM = ["0100", "0111", "0001", "0010"]

# (color, endpoint, endpoint, dashed); colors black, red, green, blue = 1..4
EDGES = [
    (2, "0100", "0101", 1), (2, "0000", "0001", 1), (2, "0010", "0011", 0), (2, "0110", "0111", 0),
    (3, "0000", "0100", 0), (3, "0001", "0101", 1), (3, "0010", "0110", 0), (3, "0011", "0111", 1),
    (4, "0000", "0010", 1), (4, "0001", "0011", 1), (4, "0100", "0110", 0), (4, "0101", "0111", 0),
    (1, "0100", "0011", 0), (1, "0000", "0111", 0), (1, "0010", "0101", 0), (1, "0110", "0001", 0),
]


def gr44() -> GeneratorList:
    return GeneratorList(tuple(SignedPermutationMatrix.from_array(m) for m in GR44))


def drawn_adinkra() -> RowOrderedValiseAdinkra:
    labels = sorted(TOP + BOTTOM)
    index = {s: i for i, s in enumerate(labels)}
    edges = tuple((index[a], index[b], c) for c, a, b, _ in EDGES)
    g = Chromotopology(4, tuple(BitWord.parse(s) for s in labels), edges, k=1)
    dash_of = {(min(index[a], index[b]), max(index[a], index[b]), c): d for c, a, b, d in EDGES}
    a = ValiseAdinkra(g, bipartition(g), Dashing(tuple(dash_of[e] for e in g.edges)))
    return RowOrderedValiseAdinkra.from_labels(a, TOP, BOTTOM)
