from math import factorial

import pytest

from adinkras.census import (census, code_count, code_dimension, dashing_multiplier, signed_class_count,
                             unsigned_class_count)
from adinkras.errors import Unsupported


def test_unsigned_examples():
    assert unsigned_class_count(4, 4) == 6
    assert unsigned_class_count(8, 8) == 151200
    assert unsigned_class_count(2, 2) == 1
    assert unsigned_class_count(3, 4) == 24


def test_signed_examples():
    assert signed_class_count(4, 4) == 1536
    assert signed_class_count(8, 8) == 79272345600
    assert signed_class_count(2, 2) == 8


def test_dashing_multiplier():
    assert dashing_multiplier(2, 0) == 8
    assert dashing_multiplier(4, 1) == 256
    assert dashing_multiplier(8, 4) == 524288


def test_impossible_sizes():
    assert code_dimension(4, 3) is None
    assert (unsigned_class_count(4, 3), signed_class_count(4, 3)) == (0, 0)
    assert code_dimension(2, 4) is None     # k would be negative
    r = census(4, 3)
    assert (r.k, r.code_count, r.unsigned_classes, r.signed_classes) == (None, 0, 0, 0)


def test_census_json():
    r = census(8, 8)
    assert r.to_json() == {"n": 8, "d": 8, "k": 4, "codes": 30,
                           "unsigned_classes": 151200, "signed_classes": 79272345600}
    assert r.to_json(lists=True)["signed_classes"] == 79272345600 * factorial(8)
    assert r.code_count_source == "closed-form"


def test_code_count_sources():
    assert code_count(6, 1) == (15, "enumeration")
    assert code_count(8, 4) == (30, "closed-form")
    with pytest.raises(Unsupported):
        code_count(14, 2)


@pytest.mark.parametrize("n", range(1, 13))
def test_divisibility_never_fails(n):
    # every power-of-two d with a valid code dimension
    d = 1
    while code_dimension(n, d) is not None:
        k = code_dimension(n, d)
        assert 2 * d == 2 ** (n - k)
        assert unsigned_class_count(n, d) * factorial(n) == factorial(d) * factorial(d - 1) * code_count(n, k)[0]
        assert signed_class_count(n, d) == unsigned_class_count(n, d) * 2 ** (2 * d + n - 2 - (n - k - 1))
        d *= 2


def test_exponent_identity():
    for n in range(1, 20):
        for k in range(n):
            d = 2 ** (n - k - 1)
            assert dashing_multiplier(n, k) == 2 ** (2 * d + n - 2 - (n - k - 1))
