"""Signed permutation matrices, the GR(d, N) relations, and the bijection
between generator lists and row-ordered valise Adinkras.

Matrix convention: ``L_i[j, k] = ±1`` exactly when an edge of color ``i``
joins the ``j``-th vertex of the bottom row (rank 1) to the ``k``-th vertex
of the top row (rank 0); the entry is ``-1`` iff that edge is dashed.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .adinkra import Dashing, ValiseAdinkra, ValiseRanking, validate_dashing
from .bitlinalg import BitWord, reduce_word, rref_rows, unit
from .chromotopology import Chromotopology, validate
from .report import ValidationReport


@dataclass(frozen=True)
class SignedPermutationMatrix:
    """Row ``j`` has its single nonzero entry ``signs[j]`` in column ``perm[j]``."""

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(int(p) for p in self.perm))
        object.__setattr__(self, "signs", tuple(int(s) for s in self.signs))
        d = len(self.perm)
        if d < 1 or len(self.signs) != d:
            raise ValueError("perm and signs must be non-empty and of equal length")
        if sorted(self.perm) != list(range(d)):
            raise ValueError(f"{self.perm} is not a permutation of 0..{d - 1}")
        if set(self.signs) - {1, -1}:
            raise ValueError("signs must be +1 or -1")

    @classmethod
    def from_array(cls, entries) -> "SignedPermutationMatrix":
        a = np.asarray(entries)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
            raise ValueError(f"expected a non-empty square matrix, got shape {a.shape}")
        if not np.isin(a, (-1, 0, 1)).all():
            row = int(np.argwhere(~np.isin(a, (-1, 0, 1)))[0][0])
            raise ValueError(f"row {row + 1}: entries must be -1, 0 or 1")
        perm, signs = [], []
        for j, row in enumerate(a):
            nz = np.flatnonzero(row)
            if len(nz) != 1:
                raise ValueError(f"row {j + 1}: expected exactly one nonzero entry, found {len(nz)}")
            perm.append(int(nz[0]))
            signs.append(int(row[nz[0]]))
        if sorted(perm) != list(range(len(perm))):
            col = next(c for c in range(len(perm)) if perm.count(c) != 1)
            raise ValueError(f"column {col + 1}: expected exactly one nonzero entry")
        return cls(tuple(perm), tuple(signs))

    @classmethod
    def identity(cls, d: int) -> "SignedPermutationMatrix":
        return cls(tuple(range(d)), (1,) * d)

    @property
    def d(self) -> int:
        return len(self.perm)

    @property
    def entries(self) -> np.ndarray:
        a = np.zeros((self.d, self.d), dtype=int)
        a[np.arange(self.d), self.perm] = self.signs
        return a

    def tolist(self) -> list[list[int]]:
        return self.entries.tolist()

    def __neg__(self) -> "SignedPermutationMatrix":
        return SignedPermutationMatrix(self.perm, tuple(-s for s in self.signs))

    def __str__(self) -> str:
        return str(self.entries)


def unsign(m: SignedPermutationMatrix) -> SignedPermutationMatrix:
    """Entrywise absolute value."""
    return SignedPermutationMatrix(m.perm, (1,) * m.d)


@dataclass(frozen=True)
class GeneratorList:
    matrices: tuple[SignedPermutationMatrix, ...]

    def __post_init__(self):
        mats = tuple(m if isinstance(m, SignedPermutationMatrix) else SignedPermutationMatrix.from_array(m)
                     for m in self.matrices)
        object.__setattr__(self, "matrices", mats)
        if not mats:
            raise ValueError("a generator list needs at least one matrix")
        if len({m.d for m in mats}) != 1:
            raise ValueError(f"matrix sizes differ: {[m.d for m in mats]}")

    @property
    def n(self) -> int:
        return len(self.matrices)

    @property
    def d(self) -> int:
        return self.matrices[0].d

    def __len__(self) -> int:
        return len(self.matrices)

    def __iter__(self):
        return iter(self.matrices)

    def __getitem__(self, i):
        return self.matrices[i]

    def unsigned(self) -> "GeneratorList":
        return GeneratorList(tuple(unsign(m) for m in self.matrices))

    def to_json(self) -> dict:
        return {"d": self.d, "n": self.n, "matrices": [m.tolist() for m in self.matrices]}

    @classmethod
    def from_json(cls, obj) -> "GeneratorList":
        """Parse the matrix-list schema; ``ValueError`` names the bad
        matrix and row."""
        if isinstance(obj, str):
            obj = json.loads(obj)
        if not isinstance(obj, dict) or "matrices" not in obj:
            raise ValueError('expected an object with a "matrices" array')
        mats = []
        for i, raw in enumerate(obj["matrices"], start=1):
            try:
                mats.append(SignedPermutationMatrix.from_array(raw))
            except ValueError as exc:
                raise ValueError(f"matrix {i}: {exc}") from None
        gl = cls(tuple(mats))
        for key, actual in (("d", gl.d), ("n", gl.n)):
            if key in obj and int(obj[key]) != actual:
                raise ValueError(f'declared "{key}"={obj[key]} but matrices give {actual}')
        return gl


def check_relations(gens) -> ValidationReport:
    """Evaluate ``L_i L_j^T + L_j L_i^T`` and ``L_i^T L_j + L_j^T L_i``
    against ``2 delta_ij I`` for every ordered pair ``(i, j)`` (1-based)."""
    if not isinstance(gens, GeneratorList):
        gens = GeneratorList(tuple(gens))
    mats = [m.entries for m in gens]
    eye2 = 2 * np.eye(gens.d, dtype=int)
    report = ValidationReport()
    for i, a in enumerate(mats):
        for j, b in enumerate(mats):
            target = eye2 if i == j else 0 * eye2
            for family, total in (("L_i L_j^T + L_j L_i^T", a @ b.T + b @ a.T),
                                  ("L_i^T L_j + L_j^T L_i", a.T @ b + b.T @ a)):
                ok = np.array_equal(total, target)
                report.add(f"({i + 1},{j + 1}) {family}", ok,
                           {"i": i + 1, "j": j + 1, "family": family, "sum": total.tolist()})
    return report


@dataclass(frozen=True)
class RowOrderedValiseAdinkra:
    """A valise Adinkra with orders on both rows.

    ``top`` lists the rank-0 vertex indices, ``bottom`` the rank-1 ones.
    """

    adinkra: ValiseAdinkra
    top: tuple[int, ...]
    bottom: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "top", tuple(self.top))
        object.__setattr__(self, "bottom", tuple(self.bottom))
        rank = self.adinkra.ranking
        if sorted(self.top) != rank.level(0) or sorted(self.bottom) != rank.level(1):
            raise ValueError("top/bottom must order the rank-0/rank-1 vertices exactly")

    @property
    def d(self) -> int:
        return len(self.top)

    @classmethod
    def from_labels(cls, adinkra: ValiseAdinkra, top: Sequence[str], bottom: Sequence[str]):
        g = adinkra.chromotopology
        return cls(adinkra, tuple(g.index(s) for s in top), tuple(g.index(s) for s in bottom))


def adinkra_to_generators(a: RowOrderedValiseAdinkra) -> GeneratorList:
    g = a.adinkra.chromotopology
    d = a.d
    if len(a.bottom) != d:
        raise ValueError("rows of a valise Adinkra must have equal size")
    top_pos = {u: k for k, u in enumerate(a.top)}
    bot_pos = {u: j for j, u in enumerate(a.bottom)}
    mats = [np.zeros((d, d), dtype=int) for _ in range(g.n)]
    for e, (u, v, c) in enumerate(g.edges):
        if u in bot_pos:
            u, v = v, u
        j, k = bot_pos[v], top_pos[u]
        if mats[c - 1][j, k]:
            raise ValueError(f"two edges of color {c} between the same pair of vertices")
        mats[c - 1][j, k] = -1 if a.adinkra.dashing.dash[e] else 1
    gens = GeneratorList(tuple(SignedPermutationMatrix.from_array(m) for m in mats))
    report = check_relations(gens)
    if not report.ok:
        raise AssertionError(f"generators read off the Adinkra violate the relations:\n{report.failures[0]}")
    return gens


def generators_to_adinkra(gens) -> RowOrderedValiseAdinkra:
    """Inverse of ``adinkra_to_generators``.

    Vertices are named by a coset labeling recovered from the graph: the
    first top vertex is the zero word, crossing an edge of color ``i`` adds
    ``e_i``, and the words of closed walks span the code.
    """
    if not isinstance(gens, GeneratorList):
        gens = GeneratorList(tuple(gens))
    report = check_relations(gens)
    if not report.ok:
        raise ValueError(f"not a list of generators:\n{report.failures[0]}")
    n, d = gens.n, gens.d
    # provisional vertices: top k -> k, bottom j -> d + j
    raw_edges = []
    for c, m in enumerate(gens, start=1):
        for j, (k, s) in enumerate(zip(m.perm, m.signs)):
            raw_edges.append((k, d + j, c, 1 if s < 0 else 0))
    pairs = {(u, v) for u, v, _, _ in raw_edges}
    if len(pairs) != len(raw_edges):
        raise AssertionError("generator list produces parallel edges; relations should exclude this")

    adj: list[list[tuple[int, int]]] = [[] for _ in range(2 * d)]
    for u, v, c, _ in raw_edges:
        adj[u].append((v, c))
        adj[v].append((u, c))
    label = {0: 0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v, c in adj[u]:
            if v not in label:
                label[v] = label[u] ^ unit(n, c)
                queue.append(v)
    if len(label) != 2 * d:
        raise ValueError("generator list gives a disconnected graph; it is a direct sum, not a chromotopology")
    code = rref_rows(label[u] ^ label[v] ^ unit(n, c) for u, v, c, _ in raw_edges)
    reps = [reduce_word(label[u], code) for u in range(2 * d)]
    if len(set(reps)) != 2 * d:
        raise AssertionError("vertices do not biject with cosets of the recovered code")
    order = sorted(range(2 * d), key=lambda u: reps[u])
    new = {old: i for i, old in enumerate(order)}
    edges = [(new[u], new[v], c) for u, v, c, _ in raw_edges]
    g = Chromotopology(n, tuple(BitWord(n, reps[u]) for u in order), tuple(edges), len(code))
    dash_of = {(min(new[u], new[v]), max(new[u], new[v]), c): s for u, v, c, s in raw_edges}
    dashing = Dashing(tuple(dash_of[e] for e in g.edges))
    ranking = ValiseRanking(tuple(0 if old < d else 1 for old in order))
    adinkra = ValiseAdinkra(g, ranking, dashing)
    graph_report = validate(g)
    if not graph_report.ok:
        raise AssertionError(f"graph from generators is not a chromotopology:\n{graph_report.failures[0]}")
    dash_report = validate_dashing(adinkra)
    if not dash_report.ok:
        raise AssertionError(f"signs do not give a dashing:\n{dash_report.failures[0]}")
    return RowOrderedValiseAdinkra(adinkra, tuple(new[k] for k in range(d)), tuple(new[d + j] for j in range(d)))


def same_row_ordered(a: RowOrderedValiseAdinkra, b: RowOrderedValiseAdinkra) -> bool:
    """Equal up to renaming vertices along the row orders."""
    if a.d != b.d or a.adinkra.n != b.adinkra.n:
        return False
    ga, gb = a.adinkra.chromotopology, b.adinkra.chromotopology
    rename = dict(zip(a.top + a.bottom, b.top + b.bottom))
    mapped = set()
    for e, (u, v, c) in enumerate(ga.edges):
        x, y = rename[u], rename[v]
        mapped.add((min(x, y), max(x, y), c, a.adinkra.dashing.dash[e]))
    theirs = {(u, v, c, b.adinkra.dashing.dash[e]) for e, (u, v, c) in enumerate(gb.edges)}
    return mapped == theirs
