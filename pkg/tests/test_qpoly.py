from fractions import Fraction

import pytest

from qcong.errors import DivisionByZeroPoly
from qcong.qpoly import QLaurent, QPoly, cyclotomic, divrem, gcd, q_binomial, q_integer, qpoch_pow


def P(*cs):
    return QPoly(cs)


def test_divrem_and_gcd():
    q, r = divrem(P(-1, 0, 1), P(-1, 1))
    assert q == P(1, 1) and r.is_zero()
    assert gcd(P(-1, 0, 1), P(0, -1, 1)) == P(-1, 1)
    with pytest.raises(DivisionByZeroPoly):
        divrem(P(1, 1), QPoly())


def test_divrem_remainder_degree():
    x, y = P(3, 0, -2, 5, 1, 7), P(Fraction(1, 2), 1, 3)
    q, r = divrem(x, y)
    assert q * y + r == x
    assert r.degree < y.degree


def test_eval():
    assert P(1, 1, 1).eval(1) == 3
    assert P(1, -2).eval(Fraction(1, 2)) == 0


def test_arithmetic_mixed_with_scalars():
    assert P(1, 1) * 2 == P(2, 2)
    assert P(1, 1) - P(1, 1) == QPoly()
    assert (P(1, 1) ** 3) == P(1, 3, 3, 1)


def test_cyclotomic_examples():
    assert cyclotomic(1) == P(-1, 1)
    assert cyclotomic(2) == P(1, 1)
    assert cyclotomic(6) == P(1, -1, 1)
    assert cyclotomic(105).coeffs.count(-2) == 2


def test_q_integer_examples():
    assert q_integer(1) == P(1)
    assert q_integer(3) == P(1, 1, 1)
    assert q_integer(7).eval(1) == 7


def test_q_binomial_examples():
    assert q_binomial(2, 1) == P(1, 1)
    assert q_binomial(4, 2) == P(1, 1, 2, 1, 1)
    assert q_binomial(9, 0) == P(1)
    assert q_binomial(3, 4).is_zero() and q_binomial(3, -1).is_zero()


def test_qpoch_pow_examples():
    assert qpoch_pow(1, 2, 2) == P(1, -1, 0, -1, 1)
    assert qpoch_pow(2, 2, 1) == P(1, 0, -1)
    assert qpoch_pow(3, 4, 0) == P(1)


def test_qpoch_pow_degree():
    for s in range(1, 4):
        for d in range(1, 5):
            for k in range(6):
                assert qpoch_pow(s, d, k).degree == s * k + d * k * (k - 1) // 2


def test_render_is_ascending():
    assert qpoch_pow(1, 2, 2).render() == "1 - q - q^3 + q^4"
    assert QPoly().render() == "0"


def test_laurent_normalises_offset():
    x = QLaurent(P(0, 0, 1, 2), -3)
    assert x.offset == -1 and x.base == P(1, 2)
    y = QLaurent.monomial(-2) * QLaurent(P(0, 0, 1))
    assert y == QLaurent(P(1))
    assert QLaurent(P(1, 1), -1).eval(2) == Fraction(3, 2)
