"""Linear algebra over Z_2 on int bitsets.

Words of length ``n`` are stored as Python ints with coordinate 1 in the
most significant position, so ``int`` order coincides with lexicographic
order of the ``'0'/'1'`` serialization ("11110000" is coordinate 1 first).

The int-level helpers (``rref_rows``, ``reduce_word`` ...) place no cap on
the width; ``BitWord`` enforces the 64-coordinate limit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import Inconsistent, ResourceGuardError

MAX_LENGTH = 64
SUBSPACE_MAX_N = 12


def weight(w) -> int:
    """Number of 1-coordinates of a ``BitWord`` or int."""
    if isinstance(w, BitWord):
        return w.value.bit_count()
    return int(w).bit_count()


def unit(n: int, i: int) -> int:
    """The unit word e_i (1-based coordinate) of length n, as an int."""
    if not 1 <= i <= n:
        raise ValueError(f"coordinate {i} outside 1..{n}")
    return 1 << (n - i)


def to_str(value: int, n: int) -> str:
    return format(value, f"0{n}b") if n else ""


def from_str(s: str) -> int:
    if s and set(s) - {"0", "1"}:
        raise ValueError(f"not a bitstring: {s!r}")
    return int(s, 2) if s else 0


@dataclass(frozen=True, order=True)
class BitWord:
    """Immutable vector in Z_2^length."""

    length: int
    value: int = 0

    def __post_init__(self):
        if not 1 <= self.length <= MAX_LENGTH:
            raise ValueError(f"length must be in 1..{MAX_LENGTH}, got {self.length}")
        if not 0 <= self.value < (1 << self.length):
            raise ValueError(f"value {self.value} does not fit in {self.length} bits")

    @classmethod
    def parse(cls, s: str) -> "BitWord":
        return cls(len(s), from_str(s))

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "BitWord":
        return cls.parse("".join(str(int(b) & 1) for b in bits))

    @classmethod
    def unit(cls, length: int, i: int) -> "BitWord":
        return cls(length, unit(length, i))

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple(int(c) for c in str(self))

    @property
    def weight(self) -> int:
        return self.value.bit_count()

    def __getitem__(self, i: int) -> int:
        """Coordinate ``i`` (1-based)."""
        if not 1 <= i <= self.length:
            raise IndexError(f"coordinate {i} outside 1..{self.length}")
        return (self.value >> (self.length - i)) & 1

    def __add__(self, other: "BitWord") -> "BitWord":
        if not isinstance(other, BitWord):
            return NotImplemented
        if other.length != self.length:
            raise ValueError("cannot add words of different lengths")
        return BitWord(self.length, self.value ^ other.value)

    __xor__ = __add__

    def __and__(self, other: "BitWord") -> "BitWord":
        if other.length != self.length:
            raise ValueError("cannot intersect words of different lengths")
        return BitWord(self.length, self.value & other.value)

    def __str__(self) -> str:
        return to_str(self.value, self.length)

    def __repr__(self) -> str:
        return f"BitWord('{self}')"


# -- int-level elimination -------------------------------------------------

def rref_rows(rows: Iterable[int]) -> list[int]:
    """Reduced row-echelon form of int rows, zero rows dropped.

    Pivots are leading (most significant) bits; rows come out with the
    leftmost pivot first, i.e. in decreasing int order.
    """
    pivots: dict[int, int] = {}  # leading bit position -> row
    for r in rows:
        while r:
            p = r.bit_length() - 1
            b = pivots.get(p)
            if b is None:
                pivots[p] = r
                break
            r ^= b
    # back-substitute, lowest pivot first, so each row is cleared by rows
    # that are already fully reduced
    done: list[int] = []
    for p in sorted(pivots):
        r = pivots[p]
        for b in done:
            if r >> (b.bit_length() - 1) & 1:
                r ^= b
        done.append(r)
    done.reverse()
    return done


def _lead(x: int) -> int:
    return 1 << (x.bit_length() - 1)


def rank_rows(rows: Iterable[int]) -> int:
    return len(rref_rows(rows))


def reduce_word(w: int, basis: Sequence[int]) -> int:
    """Clear every pivot coordinate of ``w`` using an RREF basis.

    The result is the smallest element of the coset ``w + span(basis)``.
    """
    for b in basis:
        if w & _lead(b):
            w ^= b
    return w


def span(basis: Sequence[int]) -> list[int]:
    """All 2^len(basis) combinations (zero first, then by combination index)."""
    words = [0]
    for b in basis:
        words += [w ^ b for w in words]
    return words


def is_rref(rows: Sequence[int]) -> bool:
    return list(rows) == rref_rows(rows) and len(set(rows)) == len(rows)


# -- typed matrices --------------------------------------------------------

@dataclass(frozen=True)
class BitMatrix:
    """Ordered rows of equal length ``ncols``; rows are stored as ints."""

    ncols: int
    rows: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(int(r) for r in self.rows))
        if self.ncols < 1:
            raise ValueError("ncols must be positive")
        for r in self.rows:
            if not 0 <= r < (1 << self.ncols):
                raise ValueError(f"row {r} does not fit in {self.ncols} columns")

    @classmethod
    def parse(cls, rows: Sequence[str], ncols: int | None = None) -> "BitMatrix":
        lengths = {len(r) for r in rows}
        if ncols is None:
            if len(lengths) != 1:
                raise ValueError("rows must share one length")
            (ncols,) = lengths
        elif lengths - {ncols}:
            raise ValueError(f"rows must have length {ncols}")
        return cls(ncols, tuple(from_str(r) for r in rows))

    @classmethod
    def from_words(cls, words: Sequence[BitWord]) -> "BitMatrix":
        if not words:
            raise ValueError("need at least one word to infer the length")
        n = words[0].length
        if any(w.length != n for w in words):
            raise ValueError("words must share one length")
        return cls(n, tuple(w.value for w in words))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def words(self) -> list[BitWord]:
        return [BitWord(self.ncols, r) for r in self.rows]

    def strings(self) -> list[str]:
        return [to_str(r, self.ncols) for r in self.rows]

    def serialize(self) -> str:
        return ",".join(self.strings())

    def __iter__(self):
        return iter(self.words)

    def __len__(self) -> int:
        return len(self.rows)

    def __str__(self) -> str:
        return "\n".join(self.strings())


def rref(m: BitMatrix) -> BitMatrix:
    return BitMatrix(m.ncols, tuple(rref_rows(m.rows)))


def rank(m: BitMatrix) -> int:
    return rank_rows(m.rows)


def row_space(m: BitMatrix) -> set[int]:
    return set(span(rref_rows(m.rows)))


# -- affine systems --------------------------------------------------------

@dataclass(frozen=True)
class AffineSystem:
    """Equations ``rows[e] . x = rhs[e]`` over ``nvars`` unknowns.

    Variable ``j`` (0-based) sits at bit ``nvars - 1 - j`` of each row, the
    same most-significant-first layout as ``BitWord``.
    """

    nvars: int
    rows: tuple[int, ...]
    rhs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        object.__setattr__(self, "rhs", tuple(int(b) & 1 for b in self.rhs))
        if len(self.rows) != len(self.rhs):
            raise ValueError("need one right-hand side per equation")
        if any(not 0 <= r < (1 << self.nvars) for r in self.rows):
            raise ValueError("equation row wider than nvars")

    @property
    def nequations(self) -> int:
        return len(self.rows)

    def var_mask(self, j: int) -> int:
        return 1 << (self.nvars - 1 - j)

    def satisfied_by(self, x: int) -> bool:
        return all((r & x).bit_count() & 1 == b for r, b in zip(self.rows, self.rhs))

    def unpack(self, x: int) -> tuple[int, ...]:
        """Solution int to a per-variable tuple of bits."""
        return tuple((x >> (self.nvars - 1 - j)) & 1 for j in range(self.nvars))

    def pack(self, bits: Sequence[int]) -> int:
        x = 0
        for b in bits:
            x = (x << 1) | (int(b) & 1)
        return x


@dataclass(frozen=True)
class AffineSolution:
    particular: int
    nullspace: tuple[int, ...]
    nvars: int

    @property
    def dimension(self) -> int:
        return len(self.nullspace)

    def count(self) -> int:
        return 1 << len(self.nullspace)

    def solution(self, index: int) -> int:
        """The ``index``-th solution: the particular one plus the nullspace
        combination whose coefficient tuple, read with the first basis row
        most significant, equals ``index`` in binary."""
        if not 0 <= index < self.count():
            raise IndexError(f"solution index {index} outside 0..{self.count() - 1}")
        x = self.particular
        r = len(self.nullspace)
        for t, b in enumerate(self.nullspace):
            if (index >> (r - 1 - t)) & 1:
                x ^= b
        return x

    def solutions(self) -> Iterator[int]:
        for i in range(self.count()):
            yield self.solution(i)


def solve_affine(s: AffineSystem) -> AffineSolution:
    """One solution plus a nullspace basis; raises ``Inconsistent``."""
    aug = rref_rows((r << 1) | b for r, b in zip(s.rows, s.rhs))
    if aug and aug[-1] == 1:
        raise Inconsistent("equations reduce to 0 = 1")
    pivots: dict[int, int] = {}  # pivot bit -> reduced row (without rhs)
    x = 0
    for a in aug:
        row = a >> 1
        lead = _lead(row)
        pivots[lead] = row
        if a & 1:
            x |= lead
    free = [1 << p for p in range(s.nvars - 1, -1, -1) if (1 << p) not in pivots]
    nullspace = []
    for f in free:
        v = f
        for lead, row in pivots.items():
            if row & f:
                v |= lead
        nullspace.append(v)
    return AffineSolution(x, tuple(nullspace), s.nvars)


# -- subspace enumeration --------------------------------------------------

def gaussian_binomial(n: int, k: int) -> int:
    """Number of k-dimensional subspaces of Z_2^n."""
    if not 0 <= k <= n:
        return 0
    num = den = 1
    for i in range(k):
        num *= (1 << (n - i)) - 1
        den *= (1 << (i + 1)) - 1
    return num // den


def enumerate_subspaces(n: int, k: int) -> Iterator[BitMatrix]:
    """Every k-dimensional subspace of Z_2^n once, as its RREF matrix.

    Output is ascending in the lexicographic order of the row-wise
    serialization.
    """
    if not 0 <= k <= n <= SUBSPACE_MAX_N:
        raise ResourceGuardError(f"need 0 <= k <= n <= {SUBSPACE_MAX_N}, got n={n}, k={k}")
    if k == 0:
        yield BitMatrix(n, ())
        return
    for rows in _rref_tree(k, [], list(range(1, 1 << n))):
        yield BitMatrix(n, rows)


def _rref_tree(k, rows, cands):
    # cands: ascending words that may follow ``rows`` as the next RREF row
    need = k - len(rows) - 1
    for w in cands:
        lead_bit = w.bit_length() - 1
        if lead_bit < need:
            continue
        if not need:
            yield tuple(rows) + (w,)
            continue
        # later rows lead strictly lower, and w must vanish at their pivots
        child = [x for x in cands if x.bit_length() - 1 < lead_bit and not (w >> (x.bit_length() - 1)) & 1]
        rows.append(w)
        yield from _rref_tree(k, rows, child)
        rows.pop()
