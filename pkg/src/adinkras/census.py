"""Closed-form counts of generator sets of GR(d, N).

For N colors and d x d matrices the code dimension is
``k = N - 1 - log2(d)``; with C(N, k) doubly-even codes,

    unsigned sets = d! (d-1)! C(N, k) / N!
    signed sets   = unsigned sets * 2^(2d + N - 2 - log2 d)

Every quantity is an exact Python int; divisions are asserted exact.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from math import factorial

from .codes import ENUMERATE_MAX_N, count_doubly_even, gaborit_count
from .errors import Unsupported


def log2_exact(d: int) -> int | None:
    """``log2(d)`` when ``d`` is a power of two, else None."""
    if d >= 1 and d & (d - 1) == 0:
        return d.bit_length() - 1
    return None


def code_dimension(n: int, d: int) -> int | None:
    """``k`` with ``2d = 2^(n-k)``; None when no such k >= 0 exists."""
    m = log2_exact(d)
    if m is None or n - 1 - m < 0:
        return None
    return n - 1 - m


def code_count(n: int, k: int) -> tuple[int, str]:
    """C(n, k) and where it came from ("closed-form" or "enumeration")."""
    try:
        return gaborit_count(n, k), "closed-form"
    except Unsupported:
        if n > ENUMERATE_MAX_N:
            raise Unsupported(
                f"C({n},{k}) has no closed form here and enumeration is limited to N <= {ENUMERATE_MAX_N}"
            ) from None
        return count_doubly_even(n, k), "enumeration"


def _check(n: int, d: int) -> None:
    if n < 1 or d < 1:
        raise ValueError(f"need N >= 1 and d >= 1, got N={n}, d={d}")


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return q


def dashing_multiplier(n: int, k: int) -> int:
    """Dashings of any (n, k) chromotopology: 2^(2^(n-k) + k - 1)."""
    if k < 0 or n - k < 1:
        raise ValueError(f"need k >= 0 and n - k >= 1, got n={n}, k={k}")
    exponent = 2 ** (n - k) + k - 1
    d = 2 ** (n - k - 1)
    assert exponent == 2 * d + n - 2 - (n - k - 1)
    return 2 ** exponent


def unsigned_class_count(n: int, d: int) -> int:
    """Number of sets {|L_1|, ..., |L_N|}: d! (d-1)! C(N, k) / N!."""
    _check(n, d)
    k = code_dimension(n, d)
    if k is None:
        return 0
    c, _ = code_count(n, k)
    return _exact_div(factorial(d) * factorial(d - 1) * c, factorial(n))


def signed_class_count(n: int, d: int) -> int:
    """Number of sets {L_1, ..., L_N}: the unsigned count times the number
    of dashings of each underlying chromotopology."""
    _check(n, d)
    k = code_dimension(n, d)
    if k is None:
        return 0
    return unsigned_class_count(n, d) * dashing_multiplier(n, k)


@dataclass(frozen=True)
class CensusResult:
    n: int
    d: int
    k: int | None
    code_count: int
    unsigned_classes: int
    signed_classes: int
    code_count_source: str

    def to_json(self, lists: bool = False) -> dict:
        scale = factorial(self.n) if lists else 1
        return {
            "n": self.n,
            "d": self.d,
            "k": self.k,
            "codes": self.code_count,
            "unsigned_classes": self.unsigned_classes * scale,
            "signed_classes": self.signed_classes * scale,
        }

    def asdict(self) -> dict:
        return asdict(self)


def census(n: int, d: int) -> CensusResult:
    _check(n, d)
    k = code_dimension(n, d)
    if k is None:
        return CensusResult(n, d, None, 0, 0, 0, "closed-form")
    c, source = code_count(n, k)
    unsigned = _exact_div(factorial(d) * factorial(d - 1) * c, factorial(n))
    return CensusResult(n, d, k, c, unsigned, unsigned * dashing_multiplier(n, k), source)
