"""Named verification targets: each maps (n, d) to one or more congruence checks."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Optional

from .engine import (
    INAPPLICABLE,
    REFUTED,
    VERIFIED,
    Modulus,
    Strategy,
    Verdict,
    check_congruence,
    modulus,
    verify_lhopital,
)
from .errors import InvalidParams, UnknownTarget
from .qpoly import q_binomial
from .qseries import (
    Expr,
    Frac,
    crt_combine_expr,
    lemma_rhs_expr,
    mono,
    poch,
    poly,
    qlimit_rhs_expr,
    sum_expr,
    theorem_rhs_expr,
)

__all__ = ["Check", "Target", "TargetId", "Report", "REGISTRY", "verify_target", "get_target"]


@dataclass
class Check:
    label: str
    lhs: Expr
    rhs: Expr
    modulus: Modulus
    strategy: Optional[Strategy] = None  # forced strategy, e.g. symbolic for identities


@dataclass(frozen=True)
class TargetId:
    name: str
    n: int
    d: Optional[int] = None


@dataclass
class Target:
    name: str
    kind: str  # theorem | lemma | identity | conjecture | limit
    statement: str
    build: Callable[[int, Optional[int]], list[Check]]
    d_values: tuple[int, ...] = ()
    min_n: int = 1

    @property
    def default_d(self) -> Optional[int]:
        return self.d_values[-1] if self.d_values else None


@dataclass
class Report:
    target: TargetId
    kind: str
    modulus: list[str]
    verdict: Verdict
    checks: list[dict] = field(default_factory=list)

    @property
    def status(self) -> str:
        return self.verdict.status


def _m(n: int) -> int:
    return (n - 1) // 2


def _one_minus_a() -> Frac:
    return poly({(0, 0, 0): 1, (0, 1, 0): -1})


def _one_minus_an(n: int) -> Frac:
    return poly({(0, 0, 0): 1, (0, n, 0): -1})


# --- builders --------------------------------------------------------------

def _thm(spec: str, upper: Callable[[int, int], int], variant: str):
    def build(n, d):
        return [Check("main", sum_expr(spec, upper(n, d)), theorem_rhs_expr(n, variant), modulus("n-phi-a", n))]

    return build


def _lemma(spec: str, upper, rhs_name: str, mod_kind: str):
    def build(n, d):
        return [Check("main", sum_expr(spec, upper(n, d)), lemma_rhs_expr(rhs_name, n), modulus(mod_kind, n))]

    return build


def _crt(spec: str, upper, ab_name: str, b_name: str):
    def build(n, d):
        rhs = crt_combine_expr(lemma_rhs_expr(ab_name, n), lemma_rhs_expr(b_name, n), n)
        return [Check("main", sum_expr(spec, upper(n, d)), rhs, modulus("n-a-b", n))]

    return build


def _qlimit(spec: str, upper, variant: str):
    def build(n, d):
        return [Check("main", sum_expr(spec, upper(n, d)), qlimit_rhs_expr(n, variant), modulus("n-phi3", n))]

    return build


def _two_sums(spec1, up1, spec2, up2, mod_kind):
    def build(n, d):
        return [Check("main", sum_expr(spec1, up1(n)), sum_expr(spec2, up2(n)), modulus(mod_kind, n))]

    return build


def _by_d(n, d):
    return (n - 1) // d


def _half(n, d=None):
    return (n - 1) // 2


def _full(n, d=None):
    return n - 1


def _build_ab_ident(n, d):
    from .qseries import crt_factors

    f1, f2 = crt_factors(n)
    sym = Strategy("symbolic")
    return [
        Check("ab-1", f1, Frac(1), modulus("a", n), sym),
        Check("ab-2", f2, Frac(1), modulus("b-qn", n), sym),
    ]


def _build_relation(n, d):
    lhs = poly({(0, 0, 0): 1, (n, 0, 0): -1}) * poly(
        {(0, 0, 0): 1, (0, 2, 0): 1, (0, 1, 0): -1, (n, 1, 0): -1}
    )
    pair = poly({(0, 0, 0): 1, (n, 1, 0): -1}) * poly({(0, 1, 0): 1, (n, 0, 0): -1})
    rhs = _one_minus_a() ** 2 + pair
    return [Check("main", lhs, rhs, Modulus.equality(), Strategy("symbolic"))]


def _build_lem1a(n, d):
    m = _m(n)
    lhs = poch("a", 2, 2, m) * poch("1/a", 2, 2, m)
    rhs = mono(-m * m, -m, 0, coeff=(-1) ** m) * _one_minus_an(n) / _one_minus_a()
    return [Check("main", lhs, rhs, modulus("phi", n))]


def _build_lem1b(n, d):
    m = _m(n)
    lhs = poch("a", 1, 2, m) * poch("1/a", 1, 2, m)
    rhs = mono(-m * (m + 1), -m, 0, coeff=(-1) ** m) * _one_minus_an(n) / _one_minus_a()
    return [Check("main", lhs, rhs, modulus("phi", n))]


def anfrac_rhs(n: int) -> Frac:
    m = _m(n)
    return mono(-m, m, 0, coeff=n) * _one_minus_a() / _one_minus_an(n)


def anfrac_lhs(n: int, literal: bool = False) -> Frac:
    """(q;q^2)_m^2 over (aq^2;q^2)_m (q^2/a;q^2)_m; ``literal`` uses (aq;q^2)_m (q/a;q^2)_m."""
    m = _m(n)
    s = 1 if literal else 2
    return poch("none", 1, 2, m) ** 2 / (poch("a", s, 2, m) * poch("1/a", s, 2, m))


def _build_anfrac(n, d):
    return [Check("main", anfrac_lhs(n), anfrac_rhs(n), modulus("phi", n))]


def _build_anfrac2(n, d):
    m = _m(n)
    den = poch("a", 4, 4, m) * poch("1/a", 4, 4, m)
    lhs = poch("none", 1, 2, m) * poch("none", n + 2, 2, m) / den
    middle = poch("none", 1, 2, m) * poch("none", 2, 2, m) / den
    rhs = mono(-m, m, 0, coeff=n * (-1) ** m) * _one_minus_a() / _one_minus_an(n)
    M = modulus("phi", n)
    return [Check("first", lhs, middle, M), Check("second", middle, rhs, M)]


def _build_qbino(n, d):
    lhs = poch("a", 1, 1, n - 1)
    terms = {}
    for k in range(n):
        qb = q_binomial(n - 1, k)
        sh = k * (k + 1) // 2
        for i, c in enumerate(qb.coeffs):
            if c:
                terms[(i + sh, k, 0)] = (-1) ** k * c
    expansion = poly(terms)
    geometric = poly({(0, k, 0): 1 for k in range(n)})
    return [
        Check("expansion", lhs, expansion, Modulus.equality(), Strategy("symbolic")),
        Check("congruence", lhs, geometric, modulus("phi", n)),
    ]


_REG: list[Target] = [
    Target(
        "thm1", "theorem",
        "sum_{k<=(n-1)/d} [4k+1](aq;q^2)_k(q/a;q^2)_k(q;q^2)_k^2/((aq^2;q^2)_k(q^2/a;q^2)_k(q^2;q^2)_k^2)"
        " == q^((1-n)/2)[n](1 + (1-aq^n)(a-q^n)/(1-a)^2 (1 - n(1-a)a^((n-1)/2)/(1-a^n)))"
        " mod [n]Phi_n(q)(1-aq^n)(a-q^n)",
        _thm("thm1", _by_d, "plain"), (1, 2),
    ),
    Target(
        "thm2", "theorem",
        "sum_{k<=(n-1)/2} q^(k^2)[6k+1](aq;q^2)_k(q/a;q^2)_k(q^2;q^4)_k/((aq^4;q^4)_k(q^4/a;q^4)_k(q^4;q^4)_k)"
        " == the same right side with (-q)^((1-n)/2) mod [n]Phi_n(q)(1-aq^n)(a-q^n)",
        _thm("thm2", _half, "alternating"),
    ),
    Target(
        "thm3", "theorem",
        "sum_{k<=n-1} [3k+1](aq;q^2)_k(q/a;q^2)_k(q;q^2)_k q^(-C(k+1,2))/((aq;q)_k(q/a;q)_k(q^2;q^2)_k)"
        " == the thm1 right side mod [n]Phi_n(q)(1-aq^n)(a-q^n)",
        _thm("thm3", _full, "plain"),
    ),
    Target(
        "lem-qlong", "lemma",
        "sum_{k<=(n-1)/d} [4k+1](aq;q^2)_k(q/a;q^2)_k(q/b;q^2)_k(q;q^2)_k b^k/((aq^2;q^2)_k(q^2/a;q^2)_k(bq^2;q^2)_k(q^2;q^2)_k)"
        " == (b/q)^((n-1)/2)(q^2/b;q^2)_{(n-1)/2}/(bq^2;q^2)_{(n-1)/2} [n] mod [n](1-aq^n)(a-q^n)",
        _lemma("qlong", _by_d, "lem-qlong", "n-a"), (1, 2),
    ),
    Target(
        "lem-qlong-bqn", "lemma",
        "the lem-qlong sum == (q;q^2)_{(n-1)/2}^2 [n]/((aq^2;q^2)_{(n-1)/2}(q^2/a;q^2)_{(n-1)/2}) mod b-q^n",
        _lemma("qlong", _by_d, "lem-qlong-bqn", "b-qn"), (1, 2),
    ),
    Target(
        "lem-j2", "lemma",
        "sum_{k<=(n-1)/2} [6k+1](aq;q^2)_k(q/a;q^2)_k(q;q^2)_k(q^2/b;q^4)_k b^k q^(k^2)/((aq^4;q^4)_k(q^4/a;q^4)_k(q^4;q^4)_k(bq;q^2)_k)"
        " == (q^(2+r)/b;q^4)_{(n-r)/4}/(bq^(2+r);q^4)_{(n-r)/4} b^((n-r)/4)(-q)^((1-n)/2)[n] mod [n](1-aq^n)(a-q^n), n = r mod 4",
        _lemma("j2l", _half, "lem-j2", "n-a"),
    ),
    Target(
        "lem-j2-bq2n", "lemma",
        "the lem-j2 sum == (q;q^2)_{(n-1)/2}(q^(n+2);q^2)_{(n-1)/2}[n]/((aq^4;q^4)_{(n-1)/2}(q^4/a;q^4)_{(n-1)/2}) mod b-q^(2n)",
        _lemma("j2l", _half, "lem-j2-bq2n", "b-q2n"),
    ),
    Target(
        "lem-3k1", "lemma",
        "sum_{k<=n-1} [3k+1](aq;q^2)_k(q/a;q^2)_k(q;q^2)_k(q/b;q)_k b^k q^(-C(k+1,2))/((aq;q)_k(q/a;q)_k(q;q)_k(bq^2;q^2)_k)"
        " == (b/q)^((n-1)/2)(q^2/b;q^2)_{(n-1)/2}/(bq^2;q^2)_{(n-1)/2}[n] mod [n](1-aq^n)(a-q^n)",
        _lemma("3k1", _full, "lem-3k1", "n-a"),
    ),
    Target(
        "lem-3k1-bqn", "lemma",
        "the lem-3k1 sum == (q;q^2)_{(n-1)/2}^2[n]/((aq^2;q^2)_{(n-1)/2}(q^2/a;q^2)_{(n-1)/2}) mod b-q^n",
        _lemma("3k1", _full, "lem-3k1-bqn", "b-qn"),
    ),
    Target(
        "crt-thm1", "lemma",
        "the lem-qlong sum == CRT combination of the lem-qlong and lem-qlong-bqn right sides mod [n](1-aq^n)(a-q^n)(b-q^n)",
        _crt("qlong", _by_d, "lem-qlong", "lem-qlong-bqn"), (1, 2),
    ),
    Target(
        "crt-thm2", "lemma",
        "the lem-j2 sum with b -> b^2 == CRT combination of the lem-j2 (b -> b^2) and lem-j2-bq2n right sides"
        " mod [n](1-aq^n)(a-q^n)(b-q^n)",
        _crt("j2l-b2", _half, "lem-j2-b2", "lem-j2-bq2n"),
    ),
    Target(
        "crt-thm3", "lemma",
        "the lem-3k1 sum == CRT combination of the lem-3k1 and lem-3k1-bqn right sides mod [n](1-aq^n)(a-q^n)(b-q^n)",
        _crt("3k1", _full, "lem-3k1", "lem-3k1-bqn"),
    ),
    Target(
        "qgw", "theorem",
        "sum_{k<=(n-1)/d} [4k+1](q;q^2)_k^4/(q^2;q^2)_k^4 == q^((1-n)/2)[n] + (n^2-1)(1-q)^2/24 q^((1-n)/2)[n]^3"
        " mod [n]Phi_n(q)^3 (d = 2 is the half range, d = 1 the full range)",
        _qlimit("qgw", _by_d, "plain"), (1, 2),
    ),
    Target(
        "qj2", "theorem",
        "sum_{k<=(n-1)/2} q^(k^2)[6k+1](q;q^2)_k^2(q^2;q^4)_k/(q^4;q^4)_k^3"
        " == (-q)^((1-n)/2)[n] + (n^2-1)(1-q)^2/24 (-q)^((1-n)/2)[n]^3 mod [n]Phi_n(q)^3",
        _qlimit("qj2", _half, "alternating"),
    ),
    Target(
        "qdiv", "theorem",
        "sum_{k<=n-1} [3k+1](q;q^2)_k^3 q^(-C(k+1,2))/((q;q)_k^2(q^2;q^2)_k)"
        " == q^((1-n)/2)[n] + (n^2-1)(1-q)^2/24 q^((1-n)/2)[n]^3 mod [n]Phi_n(q)^3",
        _qlimit("qdiv", _full, "plain"),
    ),
    Target(
        "equiv", "theorem",
        "the lem-qlong sum to (n-1)/2 == the same sum to n-1 mod [n]Phi_n(q)(1-aq^n)(a-q^n)(b-q^n)",
        _two_sums("qlong", _half, "qlong", _full, "n-phi-a-b"),
    ),
    Target(
        "equiv2", "theorem",
        "sum_{k<=(n-1)/2} [4k+1](q;q^2)_k^4/(q^2;q^2)_k^4 == the same sum to n-1 mod [n]Phi_n(q)^4",
        _two_sums("qgw", _half, "qgw", _full, "n-phi4"),
    ),
    Target(
        "conj-final", "conjecture",
        "the lem-qlong sum to (n-1)/2 == the lem-3k1 sum to n-1 mod [n]Phi_n(q)(1-aq^n)(a-q^n)(b-q^n)",
        _two_sums("qlong", _half, "3k1", _full, "n-phi-a-b"),
    ),
    Target(
        "conj-aeqb-q", "conjecture",
        "sum_{k<=(n-1)/2} [4k+1](q;q^2)_k^4/(q^2;q^2)_k^4 == sum_{k<=n-1} [3k+1](q;q^2)_k^3 q^(-C(k+1,2))/((q;q)_k^2(q^2;q^2)_k)"
        " mod [n]Phi_n(q)^4",
        _two_sums("qgw", _half, "qdiv", _full, "n-phi4"),
    ),
    Target(
        "ab-ident", "identity",
        "(b-q^n)(ab-1-a^2+aq^n)/((a-b)(1-ab)) == 1 mod (1-aq^n)(a-q^n) and"
        " (1-aq^n)(a-q^n)/((a-b)(1-ab)) == 1 mod b-q^n",
        _build_ab_ident,
    ),
    Target(
        "relation", "identity",
        "(1-q^n)(1+a^2-a-aq^n) = (1-a)^2 + (1-aq^n)(a-q^n)",
        _build_relation,
    ),
    Target(
        "lem1a", "lemma",
        "(aq^2;q^2)_m(q^2/a;q^2)_m == (-1)^m (1-a^n) q^(-m^2)/((1-a)a^m) mod Phi_n(q), m = (n-1)/2",
        _build_lem1a,
    ),
    Target(
        "lem1b", "lemma",
        "(aq;q^2)_m(q/a;q^2)_m == (-1)^m (1-a^n) q^((1-n^2)/4)/((1-a)a^m) mod Phi_n(q), m = (n-1)/2",
        _build_lem1b,
    ),
    Target(
        "anfrac", "lemma",
        "(q;q^2)_m^2/((aq^2;q^2)_m(q^2/a;q^2)_m) == n(1-a)a^m/((1-a^n)q^m) mod Phi_n(q), m = (n-1)/2",
        _build_anfrac,
    ),
    Target(
        "anfrac2", "lemma",
        "(q;q^2)_m(q^(n+2);q^2)_m/((aq^4;q^4)_m(q^4/a;q^4)_m) == (q;q^2)_m(q^2;q^2)_m/(same)"
        " == (-q)^(-m) n(1-a)a^m/(1-a^n) mod Phi_n(q), m = (n-1)/2",
        _build_anfrac2,
    ),
    Target(
        "qbino", "identity",
        "(aq;q)_{n-1} = sum_k (-1)^k q^C(k+1,2) [n-1 choose k] a^k, and == sum_{k<n} a^k mod Phi_n(q)",
        _build_qbino,
    ),
    Target(
        "lhopital", "limit",
        "lim_{a->1} (1-aq^n)(a-q^n)(1-a^n-n(1-a)a^((n-1)/2))/((1-a)^2(1-a^n)) = (n^2-1)(1-q)^2[n]^2/24",
        lambda n, d: [],
    ),
]

REGISTRY: dict[str, Target] = {t.name: t for t in _REG}


def get_target(name: str) -> Target:
    try:
        return REGISTRY[name]
    except KeyError:
        raise UnknownTarget(name) from None


def _validate(target: Target, tid: TargetId) -> Optional[int]:
    n = tid.n
    if not isinstance(n, int) or n < 1 or n % 2 == 0:
        raise InvalidParams(f"n must be a positive odd integer, got {n!r}")
    if tid.d is not None:
        if not target.d_values:
            raise InvalidParams(f"target {target.name} does not take d")
        if tid.d not in target.d_values:
            raise InvalidParams(f"d must be one of {target.d_values}")
        return tid.d
    return target.default_d


def verify_target(tid: TargetId, strategy: Strategy = Strategy()) -> Report:
    """Build the checks for ``tid`` and run them; the verdict is the conjunction."""
    target = get_target(tid.name)
    d = _validate(target, tid)
    tid = TargetId(tid.name, tid.n, d)
    t0 = time.perf_counter()
    if target.name == "lhopital":
        v = verify_lhopital(tid.n)
        return Report(tid, target.kind, [], v, [{"label": "limit", **v.as_dict()}])
    checks = target.build(tid.n, d)
    names: list[str] = []
    results = []
    for chk in checks:
        for nm in chk.modulus.names:
            if nm not in names:
                names.append(nm)
        v = check_congruence(chk.lhs, chk.rhs, chk.modulus, chk.strategy or strategy)
        results.append((chk, v))
        if v.status != VERIFIED:
            break
    statuses = [v.status for _, v in results]
    if all(s == VERIFIED for s in statuses):
        status = VERIFIED
    elif REFUTED in statuses:
        status = REFUTED
    else:
        status = INAPPLICABLE
    bad = next((v for _, v in results if v.status != VERIFIED), None)
    summary = Verdict(
        status,
        strategy=",".join(sorted({v.strategy for _, v in results})) or strategy.kind,
        points_used=sum(v.points_used for _, v in results),
        points_skipped=sum(v.points_skipped for _, v in results),
        degree_bounds=results[0][1].degree_bounds if len(results) == 1 else None,
        elapsed_ms=(time.perf_counter() - t0) * 1000.0,
        witness=bad.witness if bad else None,
        failure=bad.failure if bad else None,
        components=[c for _, v in results for c in v.components],
    )
    details = [{"label": chk.label, **v.as_dict()} for chk, v in results]
    return Report(tid, target.kind, names, summary, details)


