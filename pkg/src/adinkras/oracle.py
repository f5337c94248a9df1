"""Brute-force counterparts of the closed forms, for small parameters.

Nothing here calls the closed-form counts or the dashing linear algebra:
codes are counted by expanding codewords, generator lists by a pruned
depth-first search over signed permutation matrices, classes by explicit
canonical keys, and dashings by scanning every edge assignment.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterable, Iterator, Sequence

import numpy as np

from .chromotopology import Chromotopology
from .errors import ResourceGuardError
from .garden import GeneratorList, SignedPermutationMatrix, unsign

CODE_MAX_N = 12
LIST_MAX_N = 4
LIST_MAX_D = 4
SIGNED_D = (1, 2, 4)
SCAN_MAX_EDGES = 40
SWEEP_MAX_STATES = 1 << 22


# -- codes -----------------------------------------------------------------

def brute_code_count(n: int, k: int) -> int:
    """Number of k-dimensional subspaces of Z_2^n whose words all have
    weight divisible by 4.

    Walks the RREF subspace tree; a branch is cut as soon as the span of its
    rows contains a word of bad weight, which only removes subspaces that
    would fail the expansion test anyway.
    """
    if not 0 <= k <= n <= CODE_MAX_N:
        raise ResourceGuardError(f"need 0 <= k <= n <= {CODE_MAX_N}, got n={n}, k={k}")
    if k == 0:
        return 1
    count = 0

    def walk(rows, words, cands):
        # words: full span of rows; cands: next rows keeping every word good
        nonlocal count
        need = k - len(rows) - 1
        for w in cands:
            lead = w.bit_length() - 1
            if lead < need:
                continue
            if not need:
                count += 1
                continue
            coset = [c ^ w for c in words]
            child = [
                x for x in cands
                if x.bit_length() - 1 < lead
                and not (w >> (x.bit_length() - 1)) & 1
                and all((c ^ x).bit_count() % 4 == 0 for c in coset)
            ]
            walk(rows + [w], words + coset, child)

    walk([], [0], [w for w in range(1, 1 << n) if w.bit_count() % 4 == 0])
    return count


# -- generator lists -------------------------------------------------------

def signed_permutation_matrices(d: int, signed: bool = True) -> list[SignedPermutationMatrix]:
    """Permutations in lexicographic one-line order; for each, sign patterns
    counted in binary with row 1 as the most significant digit (1 = minus)."""
    out = []
    patterns = list(product((1, -1), repeat=d)) if signed else [(1,) * d]
    for p in permutations(range(d)):
        for s in patterns:
            out.append(SignedPermutationMatrix(p, s))
    return out


def _compatibility(mats: Sequence[SignedPermutationMatrix]) -> list[int]:
    """``masks[a]`` has bit ``b`` set iff matrices a and b satisfy both
    anticommutation relations as a pair of distinct generators."""
    a = np.stack([m.entries for m in mats])
    x = np.einsum("aik,bjk->abij", a, a)   # L_a L_b^T
    y = np.einsum("aki,bkj->abij", a, a)   # L_a^T L_b
    ok = ~((x + x.transpose(1, 0, 2, 3)).any(axis=(2, 3)) | (y + y.transpose(1, 0, 2, 3)).any(axis=(2, 3)))
    masks = []
    for row in ok:
        m = 0
        for b in np.flatnonzero(row):
            m |= 1 << int(b)
        masks.append(m)
    return masks


def _check_list_guard(n: int, d: int, signed: bool) -> None:
    if n < 1 or d < 1:
        raise ValueError(f"need N >= 1 and d >= 1, got N={n}, d={d}")
    if n > LIST_MAX_N or d > LIST_MAX_D or (signed and d not in SIGNED_D):
        allowed = f"d in {SIGNED_D}" if signed else f"d <= {LIST_MAX_D}"
        raise ResourceGuardError(f"list search is limited to N <= {LIST_MAX_N} and {allowed}")


def _signed_lists(n: int, d: int) -> Iterator[tuple[SignedPermutationMatrix, ...]]:
    mats = signed_permutation_matrices(d)
    masks = _compatibility(mats)
    chosen: list[int] = []

    def extend(cands):
        if len(chosen) == n:
            yield tuple(mats[i] for i in chosen)
            return
        m = cands
        while m:
            low = m & -m
            b = low.bit_length() - 1
            m ^= low
            chosen.append(b)
            yield from extend(cands & masks[b])
            chosen.pop()

    yield from extend((1 << len(mats)) - 1)


def enumerate_generator_lists(n: int, d: int, signed: bool = True) -> Iterator[GeneratorList]:
    """Every list (L_1, ..., L_N) satisfying the relations, once each.

    A partial list is extended only by matrices satisfying both relations
    with every matrix already in it.  With ``signed=False`` the stream is
    the distinct unsigned lists (|L_1|, ..., |L_N|), in order of first
    appearance.
    """
    _check_list_guard(n, d, signed)
    if signed:
        for mats in _signed_lists(n, d):
            yield GeneratorList(mats)
        return
    seen = set()
    for mats in _signed_lists(n, d):
        key = tuple(m.perm for m in mats)
        if key not in seen:
            seen.add(key)
            yield GeneratorList(tuple(unsign(m) for m in mats))


def is_connected(gens: GeneratorList) -> bool:
    """Whether the 2d-vertex graph drawn from the list is connected."""
    d = gens.d
    parent = list(range(2 * d))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for m in gens:
        for j, k in enumerate(m.perm):
            parent[find(d + j)] = find(k)
    return len({find(x) for x in range(2 * d)}) == 1


# -- orbits under row and column permutations ------------------------------

@dataclass(frozen=True, order=True)
class CanonicalClassKey:
    """Smallest image of a generator set under S_d x S_d, matrices as
    row-major entry tuples sorted lexicographically."""

    d: int
    matrices: tuple[tuple[int, ...], ...]

    def __str__(self) -> str:
        return ";".join(",".join(str(x) for x in m) for m in self.matrices)


_perm_cache: dict[int, np.ndarray] = {}


def _all_perms(d: int) -> np.ndarray:
    if d not in _perm_cache:
        _perm_cache[d] = np.array(list(permutations(range(d))), dtype=np.int64).reshape(-1, d)
    return _perm_cache[d]


def canonical_key(mats: Iterable[SignedPermutationMatrix]) -> CanonicalClassKey:
    """Minimum over all (P, Q) of the sorted serialized set {P L Q^T}.

    Each matrix is encoded as a base-3 integer of its row-major entries
    (digit = entry + 1, first entry most significant), so integer order is
    lexicographic order of the entry sequence.
    """
    mats = list(mats)
    if not mats:
        raise ValueError("empty generator set")
    d = mats[0].d
    if d > LIST_MAX_D or len(mats) > LIST_MAX_N:
        raise ResourceGuardError(f"canonical keys are limited to d <= {LIST_MAX_D}, N <= {LIST_MAX_N}")
    perms = _all_perms(d)                                  # (g, d)
    pi = np.array([m.perm for m in mats], dtype=np.int64)  # (N, d)
    sg = np.array([m.signs for m in mats], dtype=np.int64)
    # entry s_r lands at (p(r), q(pi(r)))
    rows = perms[:, None, None, :]                         # (g, 1, 1, d)
    cols = perms[:, pi][None]                              # (1, g, N, d)
    cells = rows * d + cols                                # (g, g, N, d)
    weights = 3 ** (d * d - 1 - cells)
    base = (3 ** (d * d) - 1) // 2
    codes = base + (sg[None, None] * weights).sum(axis=-1)  # (g, g, N)
    codes = np.sort(codes, axis=-1).reshape(-1, len(mats))
    best = codes[np.lexsort(codes.T[::-1])[0]]
    return CanonicalClassKey(d, tuple(_decode(int(c), d) for c in best))


def _decode(code: int, d: int) -> tuple[int, ...]:
    digits = []
    for _ in range(d * d):
        code, r = divmod(code, 3)
        digits.append(r - 1)
    return tuple(reversed(digits))


def _distinct_sets(n, d, signed, connected_only):
    sets = {}
    for gens in enumerate_generator_lists(n, d, signed):
        if connected_only and not is_connected(gens):
            continue
        key = tuple(sorted((m.perm, m.signs) for m in gens))
        sets.setdefault(key, gens)
    return sets


def brute_class_count(n: int, d: int, signed: bool = True, connected_only: bool = True) -> int:
    """Distinct canonical keys over every list found by the search.

    ``connected_only`` drops lists whose graph falls apart into several
    components (direct sums); those are not chromotopologies.
    """
    sets = _distinct_sets(n, d, signed, connected_only)
    return len({canonical_key(g.matrices) for g in sets.values()})


def brute_set_count(n: int, d: int, signed: bool = True, connected_only: bool = True) -> int:
    """Distinct generator sets (lists up to reordering), no row or column
    action."""
    return len(_distinct_sets(n, d, signed, connected_only))


def brute_list_count(n: int, d: int, signed: bool = True, connected_only: bool = True) -> int:
    return sum(1 for g in enumerate_generator_lists(n, d, signed)
               if not connected_only or is_connected(g))


# -- dashings ----------------------------------------------------------------

def _square_constraints(g: Chromotopology) -> list[list[int]]:
    """Edge sets of the components of every two-color subgraph; each must
    be a square (4 vertices, 4 edges)."""
    out = []
    for i in range(1, g.n + 1):
        for j in range(i + 1, g.n + 1):
            parent = {}

            def find(x):
                parent.setdefault(x, x)
                while parent[x] != x:
                    x = parent[x]
                return x

            picked = [e for e, (_, _, c) in enumerate(g.edges) if c in (i, j)]
            for e in picked:
                u, v, _ = g.edges[e]
                parent[find(u)] = find(v)
            comps: dict[int, list[int]] = {}
            for e in picked:
                comps.setdefault(find(g.edges[e][0]), []).append(e)
            for edges in comps.values():
                verts = {x for e in edges for x in g.edges[e][:2]}
                if len(edges) != 4 or len(verts) != 4:
                    raise ValueError(f"colors {i},{j}: component with {len(verts)} vertices and "
                                     f"{len(edges)} edges is not a square")
                out.append(sorted(edges))
    return out


def _syndromes(masks: list[int], nbits: int) -> np.ndarray:
    """For every assignment x of ``nbits`` variables, the packed parities
    of ``x & mask`` over all masks; shape (2^nbits, words)."""
    x = np.arange(1 << nbits, dtype=np.uint64)
    words = max(1, -(-len(masks) // 64))
    out = np.zeros((1 << nbits, words), dtype=np.uint64)
    for c, m in enumerate(masks):
        par = np.bitwise_count(x & np.uint64(m)) & np.uint64(1)
        out[:, c // 64] |= par << np.uint64(c % 64)
    return out


def _split_scan(nedges: int, squares: list[list[int]]) -> int:
    h = nedges // 2
    lo_masks = [sum(1 << e for e in sq if e < h) for sq in squares]
    hi_masks = [sum(1 << (e - h) for e in sq if e >= h) for sq in squares]
    lo = _syndromes(lo_masks, h)
    hi = _syndromes(hi_masks, nedges - h)
    target = np.zeros(lo.shape[1], dtype=np.uint64)
    for c in range(len(squares)):
        target[c // 64] |= np.uint64(1) << np.uint64(c % 64)
    # an assignment is valid iff lo ^ hi == all-ones, i.e. hi == lo ^ target
    want = lo ^ target
    hi_keys, hi_counts = np.unique(hi, axis=0, return_counts=True)
    table = {tuple(k): int(c) for k, c in zip(hi_keys.tolist(), hi_counts)}
    wanted_keys, wanted_counts = np.unique(want, axis=0, return_counts=True)
    return sum(int(c) * table.get(tuple(k), 0) for k, c in zip(wanted_keys.tolist(), wanted_counts))


def _sweep_scan(nedges: int, squares: list[list[int]]) -> int:
    on_edge: dict[int, list[int]] = {}
    for s, edges in enumerate(squares):
        for e in edges:
            on_edge.setdefault(e, []).append(s)
    left = [len(sq) for sq in squares]
    slot: dict[int, int] = {}
    free: list[int] = []
    # state: parity bits of the open squares -> number of partial assignments
    states = {0: 1}
    for e in range(nedges):
        for s in on_edge.get(e, ()):
            if s not in slot:
                slot[s] = free.pop() if free else len(slot)
        flip = sum(1 << slot[s] for s in on_edge.get(e, ()))
        nxt: dict[int, int] = {}
        for st, c in states.items():
            nxt[st] = nxt.get(st, 0) + c
            nxt[st ^ flip] = nxt.get(st ^ flip, 0) + c
        for s in on_edge.get(e, ()):
            left[s] -= 1
            if left[s] == 0:
                b = slot.pop(s)
                free.append(b)
                nxt = {st ^ (1 << b): c for st, c in nxt.items() if st >> b & 1}
        states = nxt
        if len(states) > SWEEP_MAX_STATES:
            raise ResourceGuardError(f"sweep exceeded {SWEEP_MAX_STATES} partial-parity states at edge {e}")
    return sum(states.values())


def brute_dashing_count(g: Chromotopology, method: str = "auto") -> int:
    """Count edge assignments in which every square has an odd number of
    dashed edges, over all 2^E assignments.

    ``"naive"`` tests the 2^E assignments one at a time (E <= 20).
    ``"split"`` pairs every assignment of the first half of the edges with
    every assignment of the second, matching square parities (E <= 40).
    ``"sweep"`` fixes edges one by one, merging partial assignments that
    agree on every square not yet complete; squares are dropped once all
    their edges are fixed.  ``"auto"`` is split when allowed, else sweep.
    """
    nedges = len(g.edges)
    squares = _square_constraints(g)
    if method == "auto":
        method = "split" if nedges <= SCAN_MAX_EDGES else "sweep"
    if method == "naive":
        if nedges > 20:
            raise ResourceGuardError("naive scan is limited to 20 edges")
        masks = [sum(1 << e for e in sq) for sq in squares]
        return sum(1 for x in range(1 << nedges) if all((x & m).bit_count() & 1 for m in masks))
    if method == "split":
        if nedges > SCAN_MAX_EDGES:
            raise ResourceGuardError(f"{nedges} edges: 2^{nedges} assignments exceeds the 2^{SCAN_MAX_EDGES} split limit")
        return _split_scan(nedges, squares)
    if method == "sweep":
        return _sweep_scan(nedges, squares)
    raise ValueError(f"unknown method {method!r}")
