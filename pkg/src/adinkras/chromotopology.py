"""Edge-colored coset graphs and the chromotopology axioms."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .bitlinalg import BitWord, reduce_word, rref_rows, unit
from .errors import ResourceGuardError
from .report import ValidationReport

BUILD_MAX_CODIM = 16

PALETTE = ("black", "red", "green", "blue", "orange", "purple", "brown", "cyan")


@dataclass(frozen=True)
class Chromotopology:
    """Graph on labeled vertices with edges ``(u, v, color)``, ``u <= v``.

    ``k`` is the code dimension for coset graphs, ``None`` for graphs given
    by hand.  Edges are kept sorted by (smaller endpoint, color), which is
    also the variable order of the dashing system.
    """

    n: int
    vertices: tuple[BitWord, ...]
    edges: tuple[tuple[int, int, int], ...]
    k: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        norm = []
        for u, v, c in self.edges:
            if not (0 <= u < len(self.vertices) and 0 <= v < len(self.vertices)):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside the vertex list")
            norm.append((min(u, v), max(u, v), int(c)))
        norm.sort(key=lambda e: (e[0], e[2], e[1]))
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def order(self) -> int:
        return len(self.vertices)

    def index(self, label) -> int:
        if isinstance(label, str):
            label = BitWord.parse(label)
        return self.vertices.index(label)

    def neighbor_table(self) -> list[dict[int, int]]:
        """``table[u][color]`` = index of the edge of that color at ``u``.

        Only meaningful for properly colored graphs; later entries win.
        """
        table: list[dict[int, int]] = [{} for _ in self.vertices]
        for e, (u, v, c) in enumerate(self.edges):
            table[u][c] = e
            table[v][c] = e
        return table

    def other_end(self, e: int, u: int) -> int:
        a, b, _ = self.edges[e]
        return b if a == u else a


def coset_graph(n: int, generators: Sequence[int]) -> Chromotopology:
    """Coset graph of ``span(generators)`` without any validity checks.

    Vertices are the cosets named by their smallest member; color ``i``
    joins ``v + C`` to ``v + e_i + C``.  Parallel edges and loops are kept,
    so degenerate codes produce multigraphs that ``validate`` rejects.
    """
    basis = rref_rows(generators)
    k = len(basis)
    if n - k > BUILD_MAX_CODIM:
        raise ResourceGuardError(f"2^{n - k} vertices exceeds the 2^{BUILD_MAX_CODIM} limit")
    pivots = {b.bit_length() - 1 for b in basis}
    free = [p for p in range(n) if p not in pivots]
    reps = []
    for m in range(1 << len(free)):
        w = 0
        for t, p in enumerate(free):
            if (m >> t) & 1:
                w |= 1 << p
        reps.append(w)
    reps.sort()
    where = {w: i for i, w in enumerate(reps)}
    edges = set()
    for u, w in enumerate(reps):
        for i in range(1, n + 1):
            v = where[reduce_word(w ^ unit(n, i), basis)]
            edges.add((min(u, v), max(u, v), i))
    return Chromotopology(n, tuple(BitWord(n, w) for w in reps), tuple(edges), k)


def build_from_code(code) -> Chromotopology:
    """Chromotopology of a doubly-even code; asserts every axiom holds."""
    g = coset_graph(code.n, code.rows)
    report = validate(g)
    if not report.ok:
        raise AssertionError(f"coset graph of {code} fails validation:\n{report}")
    return g


def _walk(g: Chromotopology, table, start: int, c1: int, c2: int, limit: int):
    """Alternate colors ``c1, c2`` from ``start`` until a ``c2`` step lands
    back on ``start``.  Returns (vertices, edge indices), or (None, None) if
    an edge is missing or ``limit`` steps pass."""
    path, edges = [start], []
    u, colors = start, (c1, c2)
    for step in range(limit):
        e = table[u].get(colors[step % 2])
        if e is None:
            return None, None
        u = g.other_end(e, u)
        edges.append(e)
        if u == start and step % 2 == 1:
            return path, edges
        path.append(u)
    return None, None


def validate(g: Chromotopology) -> ValidationReport:
    """Check the chromotopology axioms one by one, with witnesses."""
    report = ValidationReport()
    nv = g.order
    inc: list[list[int]] = [[] for _ in range(nv)]
    for u, v, c in g.edges:
        inc[u].append(c)
        inc[v].append(c)

    bad = next((u for u in range(nv) if len(inc[u]) != g.n), None)
    report.add("regular", bad is None, None if bad is None else
               {"vertex": str(g.vertices[bad]), "degree": len(inc[bad]), "expected": g.n})

    wanted = list(range(1, g.n + 1))
    bad = next((u for u in range(nv) if sorted(inc[u]) != wanted), None)
    report.add("properly_colored", bad is None, None if bad is None else
               {"vertex": str(g.vertices[bad]), "colors": sorted(inc[bad])})
    proper = bad is None

    adj: list[list[int]] = [[] for _ in range(nv)]
    for u, v, _ in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    side: dict[int, int] = {}
    odd_edge = None
    first_component: set[int] = set()
    for root in range(nv):
        if root in side:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if v not in side:
                    side[v] = 1 - side[u]
                    queue.append(v)
                elif side[v] == side[u] and odd_edge is None:
                    odd_edge = (str(g.vertices[u]), str(g.vertices[v]))
        if root == 0:
            first_component = set(side)
    missing = next((u for u in range(nv) if u not in first_component), None)
    report.add("connected", nv > 0 and missing is None,
               "empty graph" if not nv else None if missing is None else
               {"unreachable": str(g.vertices[missing])})

    loops = [e for e in g.edges if e[0] == e[1]]
    pairs: dict[tuple[int, int], int] = {}
    parallel = None
    for u, v, c in g.edges:
        if (u, v) in pairs and parallel is None:
            parallel = (str(g.vertices[u]), str(g.vertices[v]), pairs[(u, v)], c)
        pairs.setdefault((u, v), c)
    simple_witness = None
    if loops:
        u, _, c = loops[0]
        simple_witness = {"loop_at": str(g.vertices[u]), "color": c}
    elif parallel:
        simple_witness = {"parallel": parallel[:2], "colors": parallel[2:]}
    report.add("simple", simple_witness is None, simple_witness)

    report.add("bipartite", odd_edge is None, None if odd_edge is None else {"edge_within_part": odd_edge})

    report.add("two_colored_4_cycles", *_four_cycle_check(g, proper))
    return report


def _four_cycle_check(g: Chromotopology, proper: bool):
    if not proper:
        return False, "not evaluated: coloring is not proper"
    table = g.neighbor_table()
    for i, j in combinations(range(1, g.n + 1), 2):
        covered: set[int] = set()
        for u in range(g.order):
            if u in covered:
                continue
            path, _ = _walk(g, table, u, i, j, 2 * g.order + 2)
            if path is None or len(path) != 4 or len(set(path)) != 4:
                cycle = [str(g.vertices[x]) for x in path] if path else None
                return False, {"colors": (i, j), "cycle": cycle, "length": len(path) if path else None}
            covered.update(path)
    return True, None


def bipartition(g: Chromotopology):
    """Valise ranking by parity: even-weight representatives get rank 0."""
    from .adinkra import ValiseRanking

    return ValiseRanking(tuple(v.weight % 2 for v in g.vertices))


def to_dot(g: Chromotopology, ranking=None, dashing=None, name: str = "chromotopology") -> str:
    """Graphviz source; colors follow ``PALETTE`` (wrapping past 8).

    With a ranking, each rank is a ``rank=same`` cluster.  Dashed edges
    (dash value 1) get ``style=dashed``.
    """
    lines = [f"graph {name} {{", "  node [shape=circle, fontname=monospace];"]
    if ranking is None:
        for u, v in enumerate(g.vertices):
            lines.append(f'  v{u} [label="{v}"];')
    else:
        for r in (0, 1):
            lines.append(f"  subgraph cluster_rank{r} {{")
            lines.append(f'    label="rank {r}"; rank=same; style=invis;')
            for u, v in enumerate(g.vertices):
                if ranking.rank[u] == r:
                    lines.append(f'    v{u} [label="{v}"];')
            lines.append("  }")
    for e, (u, v, c) in enumerate(g.edges):
        attrs = [f"color={PALETTE[(c - 1) % len(PALETTE)]}", f'label="{c}"']
        if dashing is not None and dashing.dash[e]:
            attrs.append("style=dashed")
        lines.append(f"  v{u} -- v{v} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
