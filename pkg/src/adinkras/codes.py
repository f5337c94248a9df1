"""Doubly-even binary codes: representation, exhaustive enumeration and
Gaborit's closed-form counts C(N, k) for N = 0, 4 (mod 8)."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .bitlinalg import BitMatrix, BitWord, is_rref, rref_rows, span, to_str, from_str
from .errors import ResourceGuardError, Unsupported

EXPAND_MAX_K = 20
ENUMERATE_MAX_N = 12


def _is_doubly_even_rows(rows: Sequence[int]) -> bool:
    if len(rows) > EXPAND_MAX_K:
        raise ResourceGuardError(f"refusing to expand 2^{len(rows)} codewords (limit 2^{EXPAND_MAX_K})")
    return all(w.bit_count() % 4 == 0 for w in span(rows))


def is_doubly_even(generators: BitMatrix) -> bool:
    """True iff every word of the row space has weight divisible by 4.

    Checks all 2^k combinations of the rows.
    """
    return _is_doubly_even_rows(list(generators.rows))


@dataclass(frozen=True)
class DoublyEvenCode:
    """A doubly-even code given by its RREF generator matrix."""

    generators: BitMatrix

    def __post_init__(self):
        rows = self.generators.rows
        if not is_rref(rows):
            raise ValueError("generators must be in reduced row-echelon form")
        # generator-level test; codewords() gives the full expansion
        for i, a in enumerate(rows):
            if a.bit_count() % 4:
                raise ValueError(f"generator {to_str(a, self.n)} has weight not divisible by 4")
            for b in rows[i + 1:]:
                if (a & b).bit_count() % 2:
                    raise ValueError("generators are not pairwise orthogonal")

    @classmethod
    def from_generators(cls, n: int, rows: Sequence) -> "DoublyEvenCode":
        """Build from any spanning set (strings, ints or BitWords)."""
        ints = []
        for r in rows:
            if isinstance(r, str):
                if len(r) != n:
                    raise ValueError(f"generator {r!r} is not of length {n}")
                r = from_str(r)
            elif isinstance(r, BitWord):
                r = r.value
            ints.append(int(r))
        m = BitMatrix(n, tuple(rref_rows(ints)))
        if not is_doubly_even(m):
            raise ValueError("row space is not doubly even")
        return cls(m)

    @classmethod
    def trivial(cls, n: int) -> "DoublyEvenCode":
        return cls(BitMatrix(n, ()))

    @property
    def n(self) -> int:
        return self.generators.ncols

    @property
    def k(self) -> int:
        return self.generators.nrows

    @property
    def rows(self) -> tuple[int, ...]:
        return self.generators.rows

    def __contains__(self, w) -> bool:
        v = w.value if isinstance(w, BitWord) else from_str(w) if isinstance(w, str) else int(w)
        for b in self.rows:
            if v & (1 << (b.bit_length() - 1)):
                v ^= b
        return v == 0

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "generators": self.generators.strings()}

    @classmethod
    def from_json(cls, obj) -> "DoublyEvenCode":
        if isinstance(obj, str):
            obj = json.loads(obj)
        code = cls.from_generators(int(obj["n"]), obj["generators"])
        if "k" in obj and int(obj["k"]) != code.k:
            raise ValueError(f"declared k={obj['k']} but generators span dimension {code.k}")
        return code

    def __str__(self) -> str:
        gens = ", ".join(self.generators.strings()) or "-"
        return f"({self.n},{self.k}) code <{gens}>"


def codewords(c: DoublyEvenCode) -> list[BitWord]:
    """All 2^k codewords in increasing order (the zero word is first)."""
    if c.k > EXPAND_MAX_K:
        raise ResourceGuardError(f"refusing to expand 2^{c.k} codewords")
    return [BitWord(c.n, w) for w in sorted(span(c.rows))]


def weight_distribution(c: DoublyEvenCode) -> dict[int, int]:
    dist: dict[int, int] = {}
    for w in codewords(c):
        dist[w.weight] = dist.get(w.weight, 0) + 1
    return dict(sorted(dist.items()))


# -- enumeration -----------------------------------------------------------
#
# Codes are grown row by row in RREF.  Every RREF prefix of a doubly-even code
# spans a doubly-even subcode, so candidates for the next row are kept only if
# they are doubly even, orthogonal to every row so far, lead strictly after the
# last pivot, and sit on a coordinate where all earlier rows vanish.

def _check_n(n: int, k: int) -> None:
    if n < 1 or k < 0:
        raise ValueError(f"need n >= 1 and k >= 0, got n={n}, k={k}")
    if n > ENUMERATE_MAX_N:
        raise ResourceGuardError(f"exhaustive code enumeration is limited to n <= {ENUMERATE_MAX_N}")


def _de_tree(k: int, rows: list[int], cands: list[int]) -> Iterator[tuple[int, ...]]:
    need = k - len(rows) - 1
    for w in cands:
        lead = w.bit_length() - 1
        if lead < need:
            continue
        if not need:
            yield tuple(rows) + (w,)
            continue
        child = [
            x for x in cands
            if x.bit_length() - 1 < lead
            and not (w >> (x.bit_length() - 1)) & 1
            and not (x & w).bit_count() & 1
        ]
        rows.append(w)
        yield from _de_tree(k, rows, child)
        rows.pop()


def _doubly_even_words(n: int) -> list[int]:
    return [w for w in range(1, 1 << n) if w.bit_count() % 4 == 0]


def enumerate_doubly_even(n: int, k: int) -> Iterator[DoublyEvenCode]:
    """Every doubly-even (n, k) code exactly once.

    Codes are distinct subspaces (not equivalence classes), in increasing
    lexicographic order of their serialized RREF generators.
    """
    _check_n(n, k)
    if k == 0:
        yield DoublyEvenCode.trivial(n)
        return
    if 2 * k > n:
        return
    for rows in _de_tree(k, [], _doubly_even_words(n)):
        yield DoublyEvenCode(BitMatrix(n, rows))


def count_doubly_even_by_dimension(n: int) -> list[int]:
    """``[C(n, 0), C(n, 1), ..., C(n, n)]`` from one exhaustive search."""
    _check_n(n, 0)
    counts = [0] * (n + 1)
    counts[0] = 1

    def walk(depth, cands):
        counts[depth + 1] += len(cands)
        for w in cands:
            lead = w.bit_length() - 1
            child = [
                x for x in cands
                if x.bit_length() - 1 < lead
                and not (w >> (x.bit_length() - 1)) & 1
                and not (x & w).bit_count() & 1
            ]
            if child:
                walk(depth + 1, child)

    walk(0, _doubly_even_words(n))
    return counts


def count_doubly_even(n: int, k: int) -> int:
    """C(n, k) by exhaustive search (n <= 12)."""
    _check_n(n, k)
    if k == 0:
        return 1
    if 2 * k > n:
        return 0
    return count_doubly_even_by_dimension(n)[k]


# -- closed forms ----------------------------------------------------------

def gaborit_count(n: int, k: int) -> int:
    """C(n, k), the number of doubly-even (n, k) codes, in closed form.

    Covers k = 0, the vacuous ranges (k > n/2, or k >= 1 with n < 4), and
    n = 0 or 4 (mod 8).  Other residues raise ``Unsupported``; use
    ``count_doubly_even`` for those.
    """
    if n < 1 or k < 0:
        raise ValueError(f"need n >= 1 and k >= 0, got n={n}, k={k}")
    if k == 0:
        return 1
    if 2 * k > n or n < 4:
        return 0
    if n % 8 == 4:
        sign = -1
    elif n % 8 == 0:
        sign = 1
    else:
        raise Unsupported(f"no closed form for n = {n % 8} (mod 8)")
    half = n // 2
    value = Fraction(1)
    for i in range(k - 1):
        value *= Fraction(2 ** (n - 2 * i - 2) + sign * 2 ** (half - i - 1) - 2, 2 ** (i + 1) - 1)
    value *= Fraction(1, 2 ** (k - 1)) + Fraction(2 ** (n - 2 * k) + sign * 2 ** (half - k) - 2, 2 ** k - 1)
    if value.denominator != 1:
        raise AssertionError(f"closed form for C({n},{k}) is not an integer: {value}")
    return value.numerator
