from fractions import Fraction

import pytest

from qcong.engine import check_congruence, modulus
from qcong.errors import UnknownTarget
from qcong.parampoly import A, B, Q, PPoly, PRat
from qcong.qpoly import QLaurent, QPoly, q_integer
from qcong.qseries import (
    SPECS,
    PochFactor,
    TermSpec,
    build_sum,
    build_summand,
    crt_combine_expr,
    crt_combine_rhs,
    lemma_rhs_expr,
    rhs_lemma,
    rhs_qlimit,
    rhs_theorem,
    sum_expr,
    value_at_q1,
)
from qcong.supercong import c2_term, j2_term, sun_term


def spec_pair(x: PRat, alpha=1, beta=1):
    """x specialised at (alpha, beta) as a pair of Laurent polynomials."""
    return x.specialize(alpha, beta)


def same(x: PRat, num: QLaurent, den: QLaurent, alpha=1, beta=1) -> bool:
    n, d = spec_pair(x, alpha, beta)
    return n * den == num * d


def L(*cs, off=0):
    return QLaurent(QPoly(cs), off)


def test_summand_k0_is_one():
    for name in SPECS:
        assert build_summand(name, 0, 5) == PRat(1)


def test_thm1_summand_k1_at_a1():
    x = build_summand("thm1", 1, 5)
    assert same(x, QLaurent(q_integer(5)), L(1, 1) ** 4)


def test_thm3_summand_k1_at_a1():
    x = build_summand("thm3", 1, 5)
    num = QLaurent(q_integer(4)) * L(1, -1) ** 3 * QLaurent.monomial(-1)
    den = L(1, -1) ** 2 * L(1, 0, -1)
    assert same(x, num, den)


def test_build_sum_examples():
    for name in SPECS:
        assert build_sum(name, 3, 0) == PRat(1)
    assert build_sum("thm1", 1, 0) == rhs_theorem(1)
    x = build_sum("qgw", 3, 1)
    assert same(x, L(1, 1) ** 4 + QLaurent(q_integer(5)), L(1, 1) ** 4)


def test_build_sum_telescopes():
    for name in ("thm1", "thm2", "thm3", "qlong", "j2l-b2"):
        for u in range(1, 4):
            assert build_sum(name, 9, u) - build_sum(name, 9, u - 1) == build_summand(name, u, 9)


@pytest.mark.parametrize("k", range(11))
def test_degeneration_to_classical_terms(k):
    n = 2 * k + 3
    assert value_at_q1(build_summand("thm1", k, n)) == c2_term(k)
    assert value_at_q1(build_summand("thm2", k, n)) == j2_term(k)
    assert value_at_q1(build_summand("qgw", k, n)) == c2_term(k)
    assert value_at_q1(build_summand("qj2", k, n)) == j2_term(k)
    assert value_at_q1(build_summand("qdiv", k, n)) == sun_term(k)
    assert value_at_q1(build_summand("thm3", k, n)) == sun_term(k)


def test_rhs_theorem_examples():
    assert rhs_theorem(1) == PRat(1)
    x = rhs_theorem(3)
    inner = PRat(1 - 2 * Q**3) * PRat(2 - Q**3) * (1 - PRat(Fraction(-6, -7)))
    expected = PRat(PPoly.from_terms({(-1, 0, 0): 1, (0, 0, 0): 1, (1, 0, 0): 1})) * (1 + inner)
    assert same(x, *spec_pair(expected, 2, 0), alpha=2, beta=0)


def test_rhs_theorem_alternating_sign():
    for n in (3, 7, 11):
        assert rhs_theorem(n, "alternating") == -rhs_theorem(n, "plain")
    for n in (1, 5, 9, 13):
        assert rhs_theorem(n, "alternating") == rhs_theorem(n, "plain")


@pytest.mark.parametrize("n", range(1, 16, 2))
def test_rhs_theorem_has_no_pole_at_a1(n):
    r = rhs_theorem(n).reduce()
    assert not r.den.subs_a(1).is_zero()


def test_rhs_lemma_examples():
    assert rhs_lemma("lem-qlong", 1) == PRat(1)
    x = rhs_lemma("lem-qlong-bqn", 3)
    num = L(1, -1) ** 2 * QLaurent(q_integer(3))
    den = L(1, 0, -2) * L(1, 0, Fraction(-1, 2))
    assert same(x, num, den, alpha=2, beta=0)
    y = rhs_lemma("lem-j2", 5)
    beta = Fraction(7)
    num = L(1, 0, 0, -1 / beta) * L(beta) * QLaurent(q_integer(5))
    den = L(1, 0, 0, -beta) * QLaurent.monomial(2)
    assert same(y, num, den, alpha=3, beta=beta)
    with pytest.raises(UnknownTarget):
        rhs_lemma("nope", 3)


def test_crt_combine_examples():
    assert crt_combine_rhs(PRat(0), PRat(0), 3).is_zero()
    ab, b = rhs_lemma("lem-qlong", 5), rhs_lemma("lem-qlong-bqn", 5)
    combined = crt_combine_rhs(ab, b, 5)
    # at b = q^5 the first term vanishes and the second cofactor becomes 1
    sub = lambda x: x.subs_param_qpower("b", 5)
    assert sub(combined.num) * sub(b.den) == sub(b.num) * sub(combined.den)
    n = 5
    hand = ab * PRat((B - Q**n) * (A * B - 1 - A**2 + A * Q**n), (A - B) * (1 - A * B)) + b * PRat(
        (1 - A * Q**n) * (A - Q**n), (A - B) * (1 - A * B)
    )
    assert combined == hand


def test_rhs_qlimit_examples():
    assert rhs_qlimit(1) == PRat(1)
    q3 = PPoly([1, 1, 1])
    plain = PRat(q3, Q) + PRat(Fraction(1, 3)) * PRat((1 - Q) ** 2 * q3**3, Q)
    assert rhs_qlimit(3) == plain
    assert rhs_qlimit(3, "alternating") == -plain


def test_custom_termspec():
    # sum_k [2k+1] q^(k^2) (q;q^2)_k / (q^2;q^2)_k, built by hand for k <= 2
    ts = TermSpec((2, 1), [PochFactor("none", 1, 2, "num"), PochFactor("none", 2, 2, "den")], qexp=(2, -1))
    x = build_sum(ts, 5, 2)
    t1 = PRat(PPoly([1, 1, 1]) * Q * (1 - Q), 1 - Q**2)
    t2 = PRat(PPoly([1] * 5) * Q**4 * (1 - Q) * (1 - Q**3), (1 - Q**2) * (1 - Q**4))
    assert x == 1 + t1 + t2


def _literal_anfrac_lhs(n):
    from qcong.registry import anfrac_lhs

    return anfrac_lhs(n, literal=True)


@pytest.mark.parametrize("n", [3, 5, 7, 9, 11])
def test_anfrac_literal_denominator_is_refuted(n):
    from qcong.registry import anfrac_lhs, anfrac_rhs

    M = modulus("phi", n)
    assert check_congruence(anfrac_lhs(n), anfrac_rhs(n), M).status == "verified"
    assert check_congruence(_literal_anfrac_lhs(n), anfrac_rhs(n), M).status == "refuted"


@pytest.mark.parametrize("n", [3, 5, 7])
def test_crt_j2_needs_b_squared_in_first_factor(n):
    lhs = sum_expr("j2l-b2", (n - 1) // 2)
    good = crt_combine_expr(lemma_rhs_expr("lem-j2-b2", n), lemma_rhs_expr("lem-j2-bq2n", n), n)
    literal = crt_combine_expr(lemma_rhs_expr("lem-j2", n), lemma_rhs_expr("lem-j2-bq2n", n), n)
    M = modulus("n-a-b", n)
    assert check_congruence(lhs, good, M).status == "verified"
    assert check_congruence(lhs, literal, M).status == "refuted"
