"""Classical supercongruences: exact truncated sums and p-adic valuation margins."""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .engine import REFUTED, VERIFIED, Verdict
from .errors import DenominatorNotInvertible, InvalidParams, UnknownTarget
from .exact import bernoulli, is_prime, padic_valuation

__all__ = [
    "ClassicalTarget",
    "CLASSICAL",
    "classical_terms",
    "classical_sum",
    "check_supercongruence",
    "c2_term",
    "j2_term",
    "sun_term",
]

_HALF = Fraction(1, 2)


def _series(linear: tuple[int, int], power: int, factor: Fraction, upper: int) -> list[Fraction]:
    """Terms (m k + 1) t_k with t_0 = 1 and t_{k+1}/t_k = factor ((k+1/2)/(k+1))**power."""
    m, c = linear
    out = []
    t = Fraction(1)
    for k in range(upper + 1):
        x = (m * k + c) * t
        den = x.denominator
        if den & (den - 1):
            raise ArithmeticError(f"denominator {den} of term {k} is not a power of 2")
        out.append(x)
        t *= factor * ((k + _HALF) / (k + 1)) ** power
    return out


def c2_term(k: int) -> Fraction:
    """(4k+1) (1/2)_k^4 / k!^4."""
    return _series((4, 1), 4, Fraction(1), k)[k]


def j2_term(k: int) -> Fraction:
    """(6k+1) (1/2)_k^3 / (k!^3 4^k)."""
    return _series((6, 1), 3, Fraction(1, 4), k)[k]


def sun_term(k: int) -> Fraction:
    """(3k+1) (1/2)_k^3 4^k / k!^3."""
    return _series((3, 1), 3, Fraction(4), k)[k]


_SUMS: dict[str, tuple[tuple[int, int], int, Fraction]] = {
    "c2": ((4, 1), 4, Fraction(1)),
    "j2": ((6, 1), 3, Fraction(1, 4)),
    "sun": ((3, 1), 3, Fraction(4)),
}


def classical_terms(kind: str, upper: int) -> list[Fraction]:
    lin, pw, fac = _SUMS[kind]
    return _series(lin, pw, fac, upper)


def _sum(kind: str, upper: int) -> Fraction:
    return sum(classical_terms(kind, upper), Fraction(0))


@dataclass(frozen=True)
class _Statement:
    kind: str  # theorem | conjecture
    description: str
    min_p: int
    r_one_only: bool
    lhs: Callable[[int, int], Fraction]
    rhs: Callable[[int, int], Fraction]
    exponent: Callable[[int, int], int]


def _bernoulli_rhs(p: int, r: int) -> Fraction:
    return Fraction(p**r) + Fraction(7, 6) * bernoulli(p - 3) * p ** (r + 3)


CLASSICAL: dict[str, _Statement] = {
    "c2-half": _Statement(
        "theorem",
        "sum_{k<=(p-1)/2} (4k+1)(1/2)_k^4/k!^4 == p mod p^3",
        5, True,
        lambda p, r: _sum("c2", (p - 1) // 2),
        lambda p, r: Fraction(p),
        lambda p, r: 3,
    ),
    "c2-full": _Statement(
        "theorem",
        "sum_{k<=p-1} (4k+1)(1/2)_k^4/k!^4 == p mod p^3",
        5, True,
        lambda p, r: _sum("c2", p - 1),
        lambda p, r: Fraction(p),
        lambda p, r: 3,
    ),
    "j2": _Statement(
        "theorem",
        "sum_{k<=(p-1)/2} (6k+1)(1/2)_k^3/(k!^3 4^k) == (-1)^((p-1)/2) p mod p^4",
        5, True,
        lambda p, r: _sum("j2", (p - 1) // 2),
        lambda p, r: Fraction((-1) ** ((p - 1) // 2) * p),
        lambda p, r: 4,
    ),
    "sun-3k1": _Statement(
        "conjecture",
        "sum_{k<=p^r-1} (3k+1)(1/2)_k^3 4^k/k!^3 == p^r + (7/6) B_{p-3} p^(r+3) mod p^(r+4)",
        5, False,
        lambda p, r: _sum("sun", p**r - 1),
        _bernoulli_rhs,
        lambda p, r: r + 4,
    ),
    "bernoulli-conj": _Statement(
        "conjecture",
        "sum_{k<=(p^r-1)/2} (4k+1)(1/2)_k^4/k!^4 == p^r + (7/6) B_{p-3} p^(r+3) mod p^(r+4)",
        5, False,
        lambda p, r: _sum("c2", (p**r - 1) // 2),
        _bernoulli_rhs,
        lambda p, r: r + 4,
    ),
    "aeqb": _Statement(
        "conjecture",
        "sum_{k<=(p^r-1)/2} (4k+1)(1/2)_k^4/k!^4 == sum_{k<=p^r-1} (3k+1)(1/2)_k^3 4^k/k!^3 mod p^(r+4)",
        3, False,
        lambda p, r: _sum("c2", (p**r - 1) // 2),
        lambda p, r: _sum("sun", p**r - 1),
        lambda p, r: r + 4,
    ),
    "range-equiv": _Statement(
        "theorem",
        "sum_{k<=(p^r-1)/2} (4k+1)(1/2)_k^4/k!^4 == sum_{k<=p^r-1} (4k+1)(1/2)_k^4/k!^4 mod p^(r+4)",
        3, False,
        lambda p, r: _sum("c2", (p**r - 1) // 2),
        lambda p, r: _sum("c2", p**r - 1),
        lambda p, r: r + 4,
    ),
}


@dataclass(frozen=True)
class ClassicalTarget:
    name: str
    p: int
    r: int = 1

    def __post_init__(self) -> None:
        st = CLASSICAL.get(self.name)
        if st is None:
            raise UnknownTarget(self.name)
        if not is_prime(self.p) or self.p == 2:
            raise InvalidParams(f"p must be an odd prime, got {self.p}")
        if self.p < st.min_p:
            raise InvalidParams(f"{self.name} needs p >= {st.min_p}")
        if self.r < 1:
            raise InvalidParams("r must be positive")
        if st.r_one_only and self.r != 1:
            raise InvalidParams(f"{self.name} is stated for r = 1 only")

    @property
    def statement(self) -> _Statement:
        return CLASSICAL[self.name]

    @property
    def kind(self) -> str:
        return self.statement.kind


def classical_sum(target: ClassicalTarget) -> Fraction:
    """The left-hand sum of the statement."""
    return target.statement.lhs(target.p, target.r)


def check_supercongruence(target: ClassicalTarget) -> Verdict:
    t0 = time.perf_counter()
    st = target.statement
    p, r = target.p, target.r
    diff = st.lhs(p, r) - st.rhs(p, r)
    if diff.denominator % p == 0:
        raise DenominatorNotInvertible(f"{p} divides the denominator of the difference")
    v = padic_valuation(diff, p)
    need = st.exponent(p, r)
    status = VERIFIED if v >= need else REFUTED
    witness = None
    if status == REFUTED:
        witness = {"difference": str(diff), "valuation": v}
    return Verdict(
        status,
        strategy="p-adic",
        elapsed_ms=(time.perf_counter() - t0) * 1000.0,
        witness=witness,
        margin=v,
        required=need,
    )
