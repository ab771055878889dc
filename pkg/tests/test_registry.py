import pytest

from qcong.engine import REFUTED, VERIFIED, Strategy, check_congruence, modulus
from qcong.errors import InvalidParams, UnknownTarget
from qcong.qseries import lemma_rhs_expr, poly, qint, sum_expr, theorem_rhs_expr
from qcong.registry import REGISTRY, TargetId, get_target, verify_target


def test_spec_examples():
    r = verify_target(TargetId("thm1", 3, 1))
    assert r.status == VERIFIED
    assert r.modulus == ["[n]", "Phi_n", "(1-a q^n)", "(a-q^n)"]
    assert verify_target(TargetId("relation", 1)).status == VERIFIED
    assert verify_target(TargetId("qgw", 1)).status == VERIFIED


def test_registry_names():
    expected = {
        "thm1", "thm2", "thm3", "lem-qlong", "lem-qlong-bqn", "lem-j2", "lem-j2-bq2n", "lem-3k1",
        "lem-3k1-bqn", "crt-thm1", "crt-thm2", "crt-thm3", "qgw", "qj2", "qdiv", "equiv", "equiv2",
        "conj-final", "conj-aeqb-q", "ab-ident", "relation", "lem1a", "lem1b", "anfrac", "anfrac2", "qbino",
    }
    assert expected <= set(REGISTRY)
    assert REGISTRY["conj-final"].kind == "conjecture"
    assert REGISTRY["conj-aeqb-q"].kind == "conjecture"
    assert REGISTRY["thm1"].d_values == (1, 2)
    assert REGISTRY["qdiv"].d_values == ()


def test_parameter_validation():
    with pytest.raises(InvalidParams):
        verify_target(TargetId("thm1", 4))
    with pytest.raises(InvalidParams):
        verify_target(TargetId("thm1", -1))
    with pytest.raises(InvalidParams):
        verify_target(TargetId("thm2", 5, 1))
    with pytest.raises(InvalidParams):
        verify_target(TargetId("thm1", 5, 3))
    with pytest.raises(UnknownTarget):
        get_target("thm9")


@pytest.mark.parametrize("name", sorted(REGISTRY))
def test_every_target_small_n(name):
    t = REGISTRY[name]
    for d in t.d_values or (None,):
        assert verify_target(TargetId(name, 5, d)).status == VERIFIED


@pytest.mark.parametrize("n", [3, 5, 7])
def test_perturbed_right_side_is_refuted(n):
    lhs = sum_expr("thm1", (n - 1) // 2)
    rhs = theorem_rhs_expr(n)
    M = modulus("n-phi-a", n)
    assert check_congruence(lhs, rhs, M).status == VERIFIED
    # adding a multiple of a proper divisor of M must break it
    bump = qint(n) * poly({(0, 0, 0): 1, (n, 1, 0): -1})
    assert check_congruence(lhs, rhs + bump, M).status == REFUTED
    assert check_congruence(lhs, theorem_rhs_expr(n, "alternating") if n % 4 == 3 else rhs + 1, M).status == REFUTED


@pytest.mark.parametrize("n", [3, 5, 7])
def test_stronger_modulus_is_refuted(n):
    lhs = sum_expr("qgw", (n - 1) // 2)
    from qcong.qseries import qlimit_rhs_expr

    assert check_congruence(lhs, qlimit_rhs_expr(n), modulus("n-phi3", n)).ok
    assert check_congruence(lhs, qlimit_rhs_expr(n), modulus("n-phi4", n)).status == REFUTED


@pytest.mark.parametrize("n", [1, 3, 5, 7, 9])
def test_modulus_monotonicity(n):
    for d in (1, 2):
        lhs = sum_expr("thm1", (n - 1) // d)
        rhs = theorem_rhs_expr(n)
        assert check_congruence(lhs, rhs, modulus("n-phi-a", n)).ok
        assert check_congruence(lhs, rhs, modulus("a", n)).ok


@pytest.mark.parametrize("n", [3, 5, 7, 9])
def test_crt_consistency(n):
    for d in (1, 2):
        lhs = sum_expr("qlong", (n - 1) // d)
        assert check_congruence(lhs, lemma_rhs_expr("lem-qlong", n), modulus("n-a", n)).ok
        assert check_congruence(lhs, lemma_rhs_expr("lem-qlong-bqn", n), modulus("b-qn", n)).ok
    assert verify_target(TargetId("ab-ident", n)).status == VERIFIED
    assert verify_target(TargetId("crt-thm1", n, 2)).status == VERIFIED


def test_composite_n_with_shared_cyclotomic_factor():
    for name in ("qgw", "equiv2", "thm1", "conj-aeqb-q"):
        assert verify_target(TargetId(name, 9)).status == VERIFIED
    assert verify_target(TargetId("qgw", 15, 1)).status == VERIFIED


def test_symbolic_strategy_on_identities():
    for name in ("relation", "ab-ident", "qbino"):
        r = verify_target(TargetId(name, 7), Strategy("symbolic"))
        assert r.status == VERIFIED


def test_report_details():
    r = verify_target(TargetId("anfrac2", 7))
    assert [c["label"] for c in r.checks] == ["first", "second"]
    assert r.kind == "lemma"
