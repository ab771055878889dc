from fractions import Fraction
from math import comb, factorial

import pytest

from qcong.errors import DenominatorNotInvertible
from qcong.exact import (
    PADIC_INFINITY,
    bernoulli,
    is_prime,
    padic_valuation,
    pochhammer,
    primes,
    reduce_mod,
)


def test_pochhammer_examples():
    assert pochhammer(Fraction(1, 2), 0) == 1
    assert pochhammer(Fraction(1, 2), 2) == Fraction(3, 4)
    assert pochhammer(Fraction(1, 2), 3) == Fraction(15, 8)


def test_pochhammer_splits():
    for x in (Fraction(1, 2), Fraction(-3, 7), Fraction(5)):
        for m in range(6):
            for n in range(6):
                assert pochhammer(x, m + n) == pochhammer(x, m) * pochhammer(x + m, n)


def test_bernoulli_examples():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(12) == Fraction(-691, 2730)


def test_bernoulli_odd_vanish():
    for m in range(1, 31):
        assert bernoulli(2 * m + 1) == 0


def test_padic_valuation_examples():
    assert padic_valuation(0, 5) is PADIC_INFINITY
    assert padic_valuation(Fraction(1, 5), 5) == -1
    assert padic_valuation(Fraction(-14375, 4096), 5) == 4


def test_padic_valuation_is_additive():
    xs = [Fraction(50, 3), Fraction(-7, 125), Fraction(9, 2), Fraction(625, 11)]
    for x in xs:
        for y in xs:
            assert padic_valuation(x * y, 5) == padic_valuation(x, 5) + padic_valuation(y, 5)


def test_reduce_mod_examples():
    assert reduce_mod(3, 5, 2).value == 3
    assert reduce_mod(Fraction(1, 2), 5, 2).value == 13
    with pytest.raises(DenominatorNotInvertible):
        reduce_mod(Fraction(1, 5), 5, 2)


def test_reduce_mod_negative():
    r = reduce_mod(Fraction(-1, 2), 7, 3)
    assert (2 * r.value + 1) % 343 == 0
    assert r.modulus == 343


def test_central_binomial_small():
    for k in range(30):
        assert pochhammer(Fraction(1, 2), k) / factorial(k) == Fraction(comb(2 * k, k), 4**k)


def test_primes():
    assert [p for p, _ in zip(primes(), range(8))] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert not is_prime(1) and not is_prime(91) and is_prime(97)
