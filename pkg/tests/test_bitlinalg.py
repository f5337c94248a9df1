from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from adinkras.bitlinalg import (AffineSystem, BitMatrix, BitWord, Inconsistent, enumerate_subspaces,
                                gaussian_binomial, is_rref, rank, reduce_word, rref, rref_rows, row_space,
                                solve_affine, span, weight)
from adinkras.errors import ResourceGuardError

E8 = ["11110000", "00111100", "00001111", "01010101"]


def test_weight():
    assert weight(BitWord.parse("1111")) == 4
    assert weight(BitWord.parse("0000")) == 0
    assert BitWord.parse("11110000").weight == 4


def test_bitword_coordinates_and_order():
    w = BitWord.parse("1000")
    assert w[1] == 1 and w[4] == 0
    assert BitWord.unit(4, 1) == w
    assert w + BitWord.parse("1111") == BitWord.parse("0111")
    assert BitWord.parse("0111") < BitWord.parse("1000")
    assert str(BitWord.from_bits([0, 1, 1])) == "011"
    with pytest.raises(IndexError):
        w[0]
    with pytest.raises(ValueError):
        BitWord.parse("01") + BitWord.parse("011")
    with pytest.raises(ValueError):
        BitWord(65, 0)


def test_rref_examples():
    eye = BitMatrix.parse(["1000", "0100", "0010", "0001"])
    assert rref(eye) == eye
    assert rref(BitMatrix.parse(["1111", "1111"])).strings() == ["1111"]
    # eliminated by hand
    assert rref(BitMatrix.parse(E8)).strings() == ["10010110", "01010101", "00110011", "00001111"]
    assert rank(BitMatrix.parse(E8)) == 4


def test_serialization():
    m = BitMatrix.parse(["110", "011"])
    assert m.serialize() == "110,011"
    assert [str(w) for w in m] == ["110", "011"]
    with pytest.raises(ValueError):
        BitMatrix.parse(["11", "101"])


rows_strategy = st.integers(1, 10).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.integers(0, (1 << n) - 1), max_size=8)))


@given(rows_strategy)
def test_rref_idempotent_and_same_span(data):
    n, rows = data
    r = rref_rows(rows)
    assert rref_rows(r) == r
    assert is_rref(r)
    brute = {0}
    for coeffs in product((0, 1), repeat=len(rows)):
        w = 0
        for c, x in zip(coeffs, rows):
            if c:
                w ^= x
        brute.add(w)
    assert set(span(r)) == brute
    assert row_space(BitMatrix(n, tuple(rows))) == brute


@given(rows_strategy, st.integers(0, 1023))
def test_reduce_word_is_coset_minimum(data, w):
    n, rows = data
    w &= (1 << n) - 1
    basis = rref_rows(rows)
    assert reduce_word(w, basis) == min(w ^ c for c in span(basis))


def test_affine_examples():
    sol = solve_affine(AffineSystem(4, (0b1111,), (1,)))
    assert sol.dimension == 3 and sol.count() == 8
    with pytest.raises(Inconsistent):
        solve_affine(AffineSystem(1, (1, 1), (1, 0)))


@settings(max_examples=60)
@given(st.integers(1, 8).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.tuples(st.integers(0, (1 << n) - 1), st.integers(0, 1)), max_size=6))))
def test_affine_solution_set_matches_scan(data):
    n, eqs = data
    s = AffineSystem(n, tuple(r for r, _ in eqs), tuple(b for _, b in eqs))
    brute = [x for x in range(1 << n) if s.satisfied_by(x)]
    try:
        sol = solve_affine(s)
    except Inconsistent:
        assert brute == []
        return
    found = list(sol.solutions())
    assert len(set(found)) == len(found) == sol.count()
    assert sorted(found) == brute
    assert s.pack(s.unpack(found[0])) == found[0]


def test_gaussian_binomial():
    assert gaussian_binomial(4, 1) == 15
    assert gaussian_binomial(4, 4) == 1
    assert gaussian_binomial(8, 4) == 200787   # product formula evaluated by hand
    assert gaussian_binomial(3, 5) == 0


@pytest.mark.parametrize("n,k", [(4, 1), (4, 2), (4, 4), (5, 2), (6, 3)])
def test_enumerate_subspaces(n, k):
    subs = list(enumerate_subspaces(n, k))
    assert len(subs) == gaussian_binomial(n, k)
    assert all(is_rref(m.rows) and m.nrows == k for m in subs)
    assert len({m.rows for m in subs}) == len(subs)
    assert [m.strings() for m in subs] == sorted(m.strings() for m in subs)


def test_enumerate_subspaces_guard():
    with pytest.raises(ResourceGuardError):
        next(enumerate_subspaces(13, 1))
