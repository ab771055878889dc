"""Exact scalars: rationals, Pochhammer symbols, Bernoulli numbers, p-adic tools.

Rationals are :class:`fractions.Fraction` (always kept in lowest terms, with
positive denominator); plain ``int`` values are accepted anywhere a rational
is expected and are the fast path for integral data.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DenominatorNotInvertible

Rational = Fraction
RationalLike = Union[int, Fraction]

#: Valuation of zero.  Compares greater than every integer and is never one.
PADIC_INFINITY = math.inf

__all__ = [
    "Rational",
    "RationalLike",
    "PADIC_INFINITY",
    "PrimePowerResidue",
    "as_rational",
    "normalize",
    "pochhammer",
    "bernoulli",
    "padic_valuation",
    "int_valuation",
    "reduce_mod",
    "is_prime",
    "primes",
]


def as_rational(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def normalize(x: RationalLike) -> RationalLike:
    """Collapse integral fractions to ``int`` so integer fast paths stay hot."""
    if type(x) is Fraction and x.denominator == 1:
        return x.numerator
    return x


def pochhammer(x: RationalLike, k: int) -> Fraction:
    """Rising factorial ``x (x+1) ... (x+k-1)``; ``k = 0`` gives 1."""
    if k < 0:
        raise ValueError("k must be non-negative")
    x = as_rational(x)
    out = Fraction(1)
    for j in range(k):
        out *= x + j
    return out


_bernoulli_lock = threading.Lock()
_bernoulli_cache: list[Fraction] = [Fraction(1)]


def bernoulli(m: int) -> Fraction:
    """B_m from B_0 = 1 and sum_{k=0}^{n} C(n+1, k) B_k = 0 (so B_1 = -1/2).

    Values are memoised; the cache is extended under a lock so concurrent
    callers never observe a partially built table.
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    cache = _bernoulli_cache
    if m < len(cache):
        return cache[m]
    with _bernoulli_lock:
        while len(cache) <= m:
            n = len(cache)
            s = sum(math.comb(n + 1, k) * cache[k] for k in range(n))
            cache.append(-s / (n + 1))
        return cache[m]


def int_valuation(v: int, p: int) -> float | int:
    if v == 0:
        return PADIC_INFINITY
    v = abs(v)
    e = 0
    while v % p == 0:
        v //= p
        e += 1
    return e


def padic_valuation(x: RationalLike, p: int) -> float | int:
    """v_p(num) - v_p(den); ``PADIC_INFINITY`` for zero."""
    x = as_rational(x)
    if x == 0:
        return PADIC_INFINITY
    return int_valuation(x.numerator, p) - int_valuation(x.denominator, p)


@dataclass(frozen=True)
class PrimePowerResidue:
    value: int
    p: int
    e: int

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.p**self.e:
            raise ValueError("residue out of range")

    @property
    def modulus(self) -> int:
        return self.p**self.e


def reduce_mod(x: RationalLike, p: int, e: int) -> PrimePowerResidue:
    """num * den^{-1} mod p^e."""
    if e < 1:
        raise ValueError("exponent must be positive")
    x = as_rational(x)
    mod = p**e
    if x.denominator % p == 0:
        raise DenominatorNotInvertible(f"{p} divides the denominator of {x}")
    value = x.numerator * pow(x.denominator, -1, mod) % mod
    return PrimePowerResidue(value, p, e)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def primes(start: int = 2):
    """Infinite iterator over primes >= start."""
    n = max(start, 2)
    while True:
        if is_prime(n):
            yield n
        n += 1
