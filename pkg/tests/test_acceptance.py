"""Acceptance criteria 1-12.

Each test prints exactly one ``criterion N: PASS|FAIL ...`` line; the same lines
are repeated in the pytest terminal summary.  Run directly with
``python3 tests/test_acceptance.py`` to get only the summary lines.
"""

import time

import props
from qcong.engine import Strategy, verify_lhopital
from qcong.powerseries import JACKSON_POINTS, RAHMAN_POINTS, verify_jackson, verify_rahman
from qcong.registry import TargetId, verify_target
from qcong.supercong import ClassicalTarget, check_supercongruence


def odd(lo, hi):
    return range(lo, hi + 1, 2)


def sweep(cells, strategy=Strategy()):
    """Run registry cells; return (failures, seconds)."""
    t0 = time.perf_counter()
    bad = []
    for name, n, d in cells:
        status = verify_target(TargetId(name, n, d), strategy).status
        if status != "verified":
            bad.append((name, n, d, status))
    return bad, time.perf_counter() - t0


def classical(cells, need=None):
    """Run classical cells; ``need`` maps a cell to the minimum margin required."""
    bad = []
    for name, p, r in cells:
        v = check_supercongruence(ClassicalTarget(name, p, r))
        floor = need(name, p, r) if need else v.required
        if v.status != "verified" or v.margin < floor:
            bad.append((name, p, r, v.status, v.margin))
    return bad


def record(num, ok, text):
    line = f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {text}"
    print(line)
    props.ACCEPTANCE_RESULTS.append((num, ok, text))
    assert ok, line


def test_criterion_01_theorem_one():
    bad, secs = sweep([("thm1", n, d) for n in odd(1, 25) for d in (1, 2)])
    record(1, not bad and secs <= 300, f"thm1 odd n 1..25, d = 1, 2 ({secs:.1f}s, failures {bad})")


def test_criterion_02_theorem_two():
    bad, secs = sweep([("thm2", n, None) for n in odd(1, 21)])
    record(2, not bad, f"thm2 odd n 1..21 ({secs:.1f}s, failures {bad})")


def test_criterion_03_theorem_three():
    bad, secs = sweep([("thm3", n, None) for n in odd(1, 15)])
    record(3, not bad, f"thm3 odd n 1..15, full range ({secs:.1f}s, failures {bad})")


def test_criterion_04_parameter_free():
    cells = [("qgw", n, 2) for n in odd(1, 25)] + [("qgw", n, 1) for n in odd(1, 25)]
    cells += [("qj2", n, None) for n in odd(1, 25)] + [("qdiv", n, None) for n in odd(1, 25)]
    bad, secs = sweep(cells)
    record(4, not bad, f"qgw (half and full range), qj2, qdiv mod [n]Phi_n^3, odd n 1..25 ({secs:.1f}s, failures {bad})")


def test_criterion_05_lemma_layer():
    cells = []
    for n in odd(3, 15):
        for name in ("lem1a", "lem1b", "anfrac", "anfrac2", "lem-j2", "lem-j2-bq2n", "lem-3k1", "lem-3k1-bqn"):
            cells.append((name, n, None))
        for d in (1, 2):
            cells += [("lem-qlong", n, d), ("lem-qlong-bqn", n, d)]
    cells += [(name, n, None) for n in odd(1, 25) for name in ("ab-ident", "relation")]
    bad, secs = sweep(cells)
    record(5, not bad, f"lemma layer odd n 3..15; ab-ident and relation odd n 1..25 ({secs:.1f}s, failures {bad})")


def test_criterion_06_crt_combinations():
    cells = []
    for n in odd(3, 11):
        cells += [("crt-thm1", n, 1), ("crt-thm1", n, 2), ("crt-thm2", n, None), ("crt-thm3", n, None)]
    bad, secs = sweep(cells)
    record(6, not bad, f"CRT-combined congruences mod [n](1-aq^n)(a-q^n)(b-q^n), odd n 3..11 ({secs:.1f}s, failures {bad})")


def test_criterion_07_range_equivalence():
    cells = [("equiv", n, None) for n in odd(3, 11)] + [("equiv2", n, None) for n in odd(3, 21)]
    bad, secs = sweep(cells)
    record(7, not bad, f"equiv odd n 3..11, equiv2 mod [n]Phi_n^4 odd n 3..21 ({secs:.1f}s, failures {bad})")


def test_criterion_08_lhopital():
    bad = [n for n in odd(1, 25) if verify_lhopital(n).status != "verified"]
    record(8, not bad, f"a -> 1 limit equals (n^2-1)(1-q)^2[n]^2/24 for odd n 1..25 (failures {bad})")


def test_criterion_09_classical():
    t0 = time.perf_counter()
    primes = (5, 7, 11, 13, 17, 19)
    bad = classical([("c2-half", p, 1) for p in primes], need=lambda *_: 4)
    bad += classical([("j2", p, 1) for p in primes], need=lambda *_: 4)
    secs = time.perf_counter() - t0
    record(9, not bad and secs <= 30, f"c2 margin >= 4 and j2 margin >= 4 for p 5..19 ({secs:.2f}s, failures {bad})")


def test_criterion_10_conjectures():
    cells = [(name, p, r) for name in ("bernoulli-conj", "sun-3k1") for p in (5, 7, 11, 13) for r in (1, 2)]
    cells += [("aeqb", p, r) for p in (3, 5, 7) for r in (1, 2)]
    cells += [("range-equiv", p, r) for p in (5, 7) for r in (1, 2)]
    bad = classical(cells)
    qbad, secs = sweep([("conj-final", n, None) for n in odd(3, 9)] + [("conj-aeqb-q", n, None) for n in odd(3, 15)])
    record(10, not bad and not qbad, f"conjecture instances, classical and q-side ({secs:.1f}s, failures {bad + qbad})")


def test_criterion_11_identities():
    bad = []
    for N in range(9):
        j = verify_jackson(N, JACKSON_POINTS)
        if j.status != "verified" or j.points_used != 10:
            bad.append(N)
    v = verify_rahman(40, RAHMAN_POINTS)
    ok = not bad and v.status == "verified" and v.points_used == 5
    record(11, ok, f"Jackson exact for N 0..8 at 10 points; Rahman through q^40 at 5 points (failures {bad}, rahman {v.status})")


def test_criterion_12_properties():
    checks = [
        ("cyclotomic product n <= 60", lambda: props.check_cyclotomic_product(60)),
        ("[n] factorization", lambda: props.check_qint_factorization(60)),
        ("q-Pascal", lambda: props.check_q_pascal(20)),
        ("Pochhammer multiplicativity", props.check_pochhammer_multiplicativity),
        ("central binomial k <= 200", lambda: props.check_central_binomial(200)),
        ("Bernoulli recurrence n <= 100", lambda: props.check_bernoulli_recurrence(100)),
        ("pseudo-division x200", lambda: props.check_pseudo_division(200)),
        ("strategy agreement odd n <= 9", lambda: props.check_strategy_agreement(9)),
        ("classical degeneration k <= 10", lambda: props.check_classical_degeneration(10)),
    ]
    failed = []
    for label, fn in checks:
        try:
            fn()
        except AssertionError as exc:
            failed.append(f"{label}: {exc}")
    record(12, not failed, f"property suites ({len(checks) - len(failed)}/{len(checks)} pass; {failed})")


if __name__ == "__main__":
    import sys

    status = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                status = 1
    sys.exit(status)
