"""Valise rankings, dashings and the 2-colored 4-cycle parity system."""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, NamedTuple

from .bitlinalg import AffineSystem, BitWord, solve_affine
from .chromotopology import Chromotopology, to_dot as _graph_dot
from .errors import Inconsistent, ResourceGuardError
from .report import ValidationReport

ENUMERATE_MAX_DASHINGS = 1 << 20


@dataclass(frozen=True)
class ValiseRanking:
    """``rank[u]`` in {0, 1} for every vertex index ``u``."""

    rank: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "rank", tuple(int(r) for r in self.rank))
        if set(self.rank) - {0, 1}:
            raise ValueError("valise ranks must be 0 or 1")

    def level(self, r: int) -> list[int]:
        return [u for u, h in enumerate(self.rank) if h == r]

    def is_valid_for(self, g: Chromotopology) -> bool:
        return len(self.rank) == g.order and all(self.rank[u] != self.rank[v] for u, v, _ in g.edges)


@dataclass(frozen=True)
class Dashing:
    """``dash[e]`` in Z_2 for every edge, aligned with ``Chromotopology.edges``."""

    dash: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "dash", tuple(int(b) & 1 for b in self.dash))

    @classmethod
    def solid(cls, g: Chromotopology) -> "Dashing":
        return cls((0,) * len(g.edges))

    def dashed_edges(self) -> list[int]:
        return [e for e, b in enumerate(self.dash) if b]


class TwoColoredCycle(NamedTuple):
    colors: tuple[int, int]
    vertices: tuple[int, ...]
    edges: tuple[int, ...]


def two_colored_cycles(g: Chromotopology) -> list[TwoColoredCycle]:
    """Distinct closed walks ``i, j, i, j`` for every color pair ``i < j``.

    On a chromotopology these are exactly its 2-colored 4-cycles.  On a
    multigraph a walk may reuse an edge; it is still reported.
    """
    table = g.neighbor_table()
    seen: set = set()
    cycles = []
    for i, j in combinations(range(1, g.n + 1), 2):
        # a closed i,j walk is its whole i,j component, so its vertices
        # would only find it again
        covered: set[int] = set()
        for start in range(g.order):
            if start in covered:
                continue
            u, verts, edges = start, [start], []
            for c in (i, j, i, j):
                e = table[u].get(c)
                if e is None:
                    raise ValueError(f"vertex {g.vertices[u]} has no edge of color {c}")
                edges.append(e)
                u = g.other_end(e, u)
                verts.append(u)
            if u != start:
                raise ValueError(f"colors {i},{j} do not close a 4-cycle at {g.vertices[start]}")
            key = (i, j, frozenset(edges))
            if key in seen:
                continue
            seen.add(key)
            covered.update(verts)
            cycles.append(TwoColoredCycle((i, j), tuple(verts[:4]), tuple(edges)))
    return cycles


def dashing_system(g: Chromotopology) -> AffineSystem:
    """One unknown per edge, one equation ``sum = 1`` per 2-colored 4-cycle.

    Unknowns follow ``g.edges`` order.  Redundant equations are kept.
    """
    nvars = len(g.edges)
    rows = []
    for cyc in two_colored_cycles(g):
        row = 0
        for e in cyc.edges:
            row ^= 1 << (nvars - 1 - e)
        rows.append(row)
    return AffineSystem(nvars, tuple(rows), (1,) * len(rows))


def _solve(g: Chromotopology):
    return solve_affine(dashing_system(g))


def count_dashings(g: Chromotopology) -> int:
    """Number of dashings: 2^(edges - rank), or 0 if none exist."""
    try:
        return _solve(g).count()
    except Inconsistent:
        return 0


def is_adinkraizable(g: Chromotopology) -> bool:
    try:
        _solve(g)
    except Inconsistent:
        return False
    return True


def dashing_at(g: Chromotopology, index: int) -> Dashing:
    """The ``index``-th dashing in ``enumerate_dashings`` order."""
    system = dashing_system(g)
    sol = solve_affine(system)
    return Dashing(system.unpack(sol.solution(index)))


def enumerate_dashings(g: Chromotopology) -> Iterator[Dashing]:
    """Every dashing once: the particular solution plus nullspace
    combinations, combinations counted in binary with the first basis vector
    as the most significant digit."""
    system = dashing_system(g)
    try:
        sol = solve_affine(system)
    except Inconsistent:
        return
    if sol.count() > ENUMERATE_MAX_DASHINGS:
        raise ResourceGuardError(f"{sol.count()} dashings exceeds the {ENUMERATE_MAX_DASHINGS} limit")
    for x in sol.solutions():
        yield Dashing(system.unpack(x))


def flip_vertex(g: Chromotopology, dashing: Dashing, u: int) -> Dashing:
    """Toggle the dash on every edge at vertex ``u``."""
    dash = list(dashing.dash)
    for e, (a, b, _) in enumerate(g.edges):
        if u in (a, b):
            dash[e] ^= 1
    return Dashing(tuple(dash))


@dataclass(frozen=True)
class ValiseAdinkra:
    chromotopology: Chromotopology
    ranking: ValiseRanking
    dashing: Dashing

    @property
    def n(self) -> int:
        return self.chromotopology.n

    def to_json(self) -> dict:
        g = self.chromotopology
        return {
            "n": g.n,
            "k": g.k,
            "vertices": [{"rep": str(v), "rank": self.ranking.rank[u]} for u, v in enumerate(g.vertices)],
            "edges": [
                {"u": u, "v": v, "color": c, "dash": self.dashing.dash[e]}
                for e, (u, v, c) in enumerate(g.edges)
            ],
        }

    @classmethod
    def from_json(cls, obj) -> "ValiseAdinkra":
        if isinstance(obj, str):
            obj = json.loads(obj)
        verts = [BitWord.parse(v["rep"]) for v in obj["vertices"]]
        raw = [(int(e["u"]), int(e["v"]), int(e["color"]), int(e.get("dash", 0))) for e in obj["edges"]]
        g = Chromotopology(int(obj["n"]), tuple(verts), tuple(r[:3] for r in raw), obj.get("k"))
        dash_of = {(min(u, v), max(u, v), c): d for u, v, c, d in raw}
        dashing = Dashing(tuple(dash_of[e] for e in g.edges))
        return cls(g, ValiseRanking(tuple(int(v["rank"]) for v in obj["vertices"])), dashing)

    def to_dot(self, name: str = "adinkra") -> str:
        return _graph_dot(self.chromotopology, self.ranking, self.dashing, name=name)


def validate_dashing(a: ValiseAdinkra) -> ValidationReport:
    """One check per 2-colored 4-cycle: the dash sum must be odd."""
    g = a.chromotopology
    report = ValidationReport()
    if len(a.dashing.dash) != len(g.edges):
        report.add("dash_length", False, {"dashes": len(a.dashing.dash), "edges": len(g.edges)})
        return report
    report.add("valise_ranking", a.ranking.is_valid_for(g),
               "some edge joins two vertices of the same rank")
    labels = [str(v) for v in g.vertices]
    for cyc in two_colored_cycles(g):
        total = sum(a.dashing.dash[e] for e in cyc.edges) % 2
        verts = [labels[u] for u in cyc.vertices]
        report.add(f"cycle colors={cyc.colors} at {'-'.join(verts)}", total == 1,
                   {"colors": cyc.colors, "vertices": verts, "dash_sum": total})
    return report
