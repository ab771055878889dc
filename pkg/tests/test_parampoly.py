from fractions import Fraction

import pytest

from qcong.errors import DivisionByZeroPoly, DivisionByZeroRat
from qcong.parampoly import A, B, Q, MPolyAB, PPoly, PRat, degree_bounds, pseudo_divrem, specialize
from qcong.qpoly import QLaurent, QPoly


def one_minus_aq(n):
    return PPoly.from_terms({(0, 0, 0): 1, (n, 1, 0): -1})


def a_minus_q(n):
    return PPoly.from_terms({(0, 1, 0): 1, (n, 0, 0): -1})


def test_pseudo_divrem_example():
    N = PPoly.from_terms({(2, 0, 0): 1})
    M = PPoly.from_terms({(1, 1, 0): 1, (0, 0, 0): 1})
    Qt, R, e = pseudo_divrem(N, M)
    assert e == 2
    assert Qt == PPoly.from_terms({(1, 1, 0): 1, (0, 0, 0): -1})
    assert R == PPoly.from_terms({(0, 0, 0): 1})
    lc = PPoly([M.lc])
    assert lc**e * N == Qt * M + R


def test_pseudo_divrem_exact_divisibility():
    M = one_minus_aq(3) * a_minus_q(3)
    N = M * PPoly.from_terms({(0, 0, 0): 1, (1, 0, 0): 1})
    _, R, _ = pseudo_divrem(N, M)
    assert R.is_zero()
    _, R, _ = pseudo_divrem(M, M)
    assert R.is_zero()
    with pytest.raises(DivisionByZeroPoly):
        pseudo_divrem(M, PPoly())


def test_specialize_examples():
    assert specialize(one_minus_aq(4), 1) == QLaurent(QPoly([1, 0, 0, 0, -1]))
    assert specialize(a_minus_q(1) * one_minus_aq(1), 0) == QLaurent(QPoly([0, -1]))


def test_relation_specializes_to_zero():
    n = 5
    lhs = PPoly.from_terms({(0, 0, 0): 1, (n, 0, 0): -1}) * PPoly.from_terms(
        {(0, 0, 0): 1, (0, 2, 0): 1, (0, 1, 0): -1, (n, 1, 0): -1}
    )
    rhs = (1 - A) ** 2 + one_minus_aq(n) * a_minus_q(n)
    for alpha, beta in [(2, 3), (Fraction(-1, 3), 7)]:
        assert specialize(lhs - rhs, alpha, beta).is_zero()


def test_degree_bounds_examples():
    assert degree_bounds(one_minus_aq(3) * a_minus_q(3)) == (6, 2, 0)
    assert degree_bounds(B - Q**5) == (5, 0, 1)
    assert degree_bounds(PPoly()) == (-1, -1, -1)


def test_prat_examples():
    one_minus_q = PRat(1 - Q)
    s = PRat(1, 1 - Q) + PRat(Q, 1 - Q)
    assert s == PRat(1 + Q, 1 - Q)
    r = PRat(1 - Q**2, (1 - Q) ** 2).reduce()
    assert r.num.degree_bounds()[0] == 1 and r.den.degree_bounds()[0] == 1
    assert r == PRat(1 + Q, 1 - Q)
    x = PRat(A + Q, B - Q)
    assert (x - x).is_zero()
    assert PRat(1 - A**2, 1 - A).reduce() == PRat(1 + A)
    assert PRat(1 - A**2, 1 - A).reduce().den.degree_bounds() == (0, 0, 0)
    with pytest.raises(DivisionByZeroRat):
        one_minus_q / PRat(0)


def test_reduce_is_idempotent():
    x = PRat((1 - A * Q) * (A - Q) * (1 + B), (1 - A * Q) * (1 - B**2))
    r = x.reduce()
    assert r == x
    rr = r.reduce()
    assert rr.num == r.num and rr.den == r.den


def test_mpoly_basics():
    x = MPolyAB.monomial(2, 1, 3) + MPolyAB.const(1)
    assert x.deg_a == 2 and x.deg_b == 1
    assert x.eval(2, 5) == 61
    assert x.subs_a(1).eval(0, 2) == 7


def test_render_order():
    p = PPoly.from_terms({(3, 2, 1): Fraction(-1, 2), (0, 0, 0): 1})
    assert p.render() == "1 - (1/2)*a^2*b*q^3"
