"""Summands, truncated sums and closed forms, built from a small term language.

Everything here is built twice over: as a lazy expression (:class:`Frac`,
:class:`HyperSum`, :class:`Combo`) whose leaves are small polynomial factors,
and -- on request -- materialised into a :class:`~qcong.parampoly.PRat`.  The
congruence engine evaluates the lazy form directly in whatever ring it needs
(a quotient ring, a specialisation, a substitution), which keeps the large
sums cheap.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence, Union

from .exact import RationalLike
from .parampoly import PPoly, PRat

__all__ = [
    "PochFactor",
    "TermSpec",
    "Frac",
    "HyperSum",
    "Combo",
    "Expr",
    "poch",
    "qint",
    "mono",
    "const",
    "poly",
    "summand_expr",
    "sum_expr",
    "materialize",
    "build_summand",
    "build_sum",
    "theorem_rhs_expr",
    "rhs_theorem",
    "lemma_rhs_expr",
    "rhs_lemma",
    "crt_combine_expr",
    "crt_factors",
    "value_at_q1",
    "crt_combine_rhs",
    "qlimit_rhs_expr",
    "rhs_qlimit",
    "SPECS",
    "PARAM_EXPONENTS",
]

# base_param -> exponents (of a, of b) of the parameter monomial x in (x q^s; q^d)_k
PARAM_EXPONENTS: dict[str, tuple[int, int]] = {
    "none": (0, 0),
    "a": (1, 0),
    "1/a": (-1, 0),
    "b": (0, 1),
    "1/b": (0, -1),
    "b^2": (0, 2),
    "1/b^2": (0, -2),
}


# --- lazy expressions ----------------------------------------------------

class Frac:
    """coeff * mono * prod(num) / prod(den).

    ``coeff`` is an integer (rational scalars put their denominator into
    ``den``), ``mono`` is the exponent triple of q**i a**j b**k with possibly
    negative entries, and ``num``/``den`` are tuples of polynomial factors
    (PPoly with no negative exponents).
    """

    __slots__ = ("coeff", "mono", "num", "den")

    def __init__(
        self,
        coeff: RationalLike = 1,
        num: Sequence[PPoly] = (),
        den: Sequence[PPoly] = (),
        mono: tuple[int, int, int] = (0, 0, 0),
    ):
        c = Fraction(coeff)
        den = list(den)
        if c.denominator != 1:
            den.append(PPoly([c.denominator]))
        for f in den:
            if f.is_zero():
                raise ZeroDivisionError("zero factor in a denominator")
        self.coeff = c.numerator
        self.num = tuple(f for f in num if f != _ONE)
        self.den = tuple(f for f in den if f != _ONE)
        self.mono = tuple(mono)

    def __mul__(self, other: "Frac") -> "Frac":
        if isinstance(other, (int, Fraction)):
            return Frac(self.coeff * Fraction(other), self.num, self.den, self.mono)
        if not isinstance(other, Frac):
            return NotImplemented
        return Frac(
            self.coeff * other.coeff,
            self.num + other.num,
            self.den + other.den,
            tuple(x + y for x, y in zip(self.mono, other.mono)),
        )

    __rmul__ = __mul__

    def inverse(self) -> "Frac":
        if self.coeff == 0:
            raise ZeroDivisionError("inverse of zero")
        num = self.den
        den = self.num
        c = Fraction(1, self.coeff)
        return Frac(c, num, den, tuple(-x for x in self.mono))

    def __truediv__(self, other: "Frac") -> "Frac":
        return self * other.inverse()

    def __pow__(self, e: int) -> "Frac":
        if e < 0:
            return self.inverse() ** (-e)
        return Frac(
            self.coeff**e, self.num * e, self.den * e, tuple(x * e for x in self.mono)
        )

    def __neg__(self) -> "Frac":
        return Frac(-self.coeff, self.num, self.den, self.mono)

    def __add__(self, other) -> "Combo":
        return Combo([(1, self)]) + other

    def __sub__(self, other) -> "Combo":
        return Combo([(1, self)]) - other

    def mono_factors(self) -> tuple[PPoly | None, PPoly | None]:
        """Split the monomial into (numerator factor, denominator factor)."""
        eq, ea, eb = self.mono
        up = (max(eq, 0), max(ea, 0), max(eb, 0))
        down = (max(-eq, 0), max(-ea, 0), max(-eb, 0))
        nf = PPoly.from_terms({up: 1}) if any(up) else None
        df = PPoly.from_terms({down: 1}) if any(down) else None
        return nf, df

    def num_factors(self) -> tuple[PPoly, ...]:
        nf, _ = self.mono_factors()
        return self.num + ((nf,) if nf is not None else ())

    def den_factors(self) -> tuple[PPoly, ...]:
        _, df = self.mono_factors()
        return self.den + ((df,) if df is not None else ())


_ONE = PPoly([1])


@dataclass
class HyperSum:
    """sum_{k=0}^{K} extras[k] * prod_{j<=k} steps[j], with steps[0] the k = 0 term.

    ``steps[k]`` (k >= 1) is the ratio term_k / term_{k-1} of the carried part;
    ``extras[k]`` is a numerator-only factor that is not carried (e.g. [4k+1]).
    """

    steps: list[Frac]
    extras: list[Frac]

    def __post_init__(self) -> None:
        if len(self.steps) != len(self.extras):
            raise ValueError("steps and extras must align")
        for x in self.extras:
            if x.den_factors():
                raise ValueError("extras must be numerator-only")

    @property
    def upper(self) -> int:
        return len(self.steps) - 1

    def __add__(self, other) -> "Combo":
        return Combo([(1, self)]) + other

    def __sub__(self, other) -> "Combo":
        return Combo([(1, self)]) - other

    def __neg__(self) -> "Combo":
        return Combo([(-1, self)])


@dataclass
class Combo:
    """Linear combination sum c_i * part_i with integer/rational scalars."""

    parts: list[tuple[RationalLike, Union[Frac, HyperSum]]] = field(default_factory=list)

    @staticmethod
    def of(x) -> "Combo":
        if isinstance(x, Combo):
            return x
        if isinstance(x, (Frac, HyperSum)):
            return Combo([(1, x)])
        if isinstance(x, (int, Fraction)):
            return Combo([(1, Frac(x))])
        raise TypeError(f"cannot combine {type(x).__name__}")

    def __add__(self, other) -> "Combo":
        return Combo(self.parts + Combo.of(other).parts)

    __radd__ = __add__

    def __neg__(self) -> "Combo":
        return Combo([(-c, p) for c, p in self.parts])

    def __sub__(self, other) -> "Combo":
        return self + (-Combo.of(other))

    def __rsub__(self, other) -> "Combo":
        return Combo.of(other) - self

    def __mul__(self, other) -> "Combo":
        if isinstance(other, (int, Fraction)):
            return Combo([(c * other, p) for c, p in self.parts])
        if isinstance(other, Frac):
            out = []
            for c, p in self.parts:
                if isinstance(p, Frac):
                    out.append((c, p * other))
                else:
                    raise TypeError("cannot multiply a HyperSum lazily")
            return Combo(out)
        return NotImplemented

    __rmul__ = __mul__

    def flat(self) -> Iterator[tuple[RationalLike, Union[Frac, HyperSum]]]:
        for c, p in self.parts:
            if c:
                yield c, p


Expr = Union[Frac, HyperSum, Combo]


# --- factor helpers ------------------------------------------------------

def const(c: RationalLike) -> Frac:
    return Frac(c)


def mono(eq: int = 0, ea: int = 0, eb: int = 0, coeff: RationalLike = 1) -> Frac:
    """coeff * q**eq * a**ea * b**eb (negative exponents allowed)."""
    return Frac(coeff, mono=(eq, ea, eb))


def poly(terms: dict[tuple[int, int, int], RationalLike]) -> Frac:
    """A single polynomial factor from ``{(q, a, b) exponents: coeff}``; exponents >= 0."""
    return Frac(1, num=(PPoly.from_terms(terms),))


def binomial_factor(ea: int, eb: int, t: int, c: RationalLike = 1) -> Frac:
    """1 - c * a**ea * b**eb * q**t as a polynomial factor over a parameter monomial."""
    sa, sb = max(-ea, 0), max(-eb, 0)
    if t < 0:
        # q**|t| (1 - x q^t) = q**|t| - x
        f = PPoly.from_terms({(-t, sa, sb): 1, (0, ea + sa, eb + sb): -c})
        return Frac(1, num=(f,), mono=(t, -sa, -sb))
    f = PPoly.from_terms({(0, sa, sb): 1, (t, ea + sa, eb + sb): -c})
    if f.is_zero():
        return Frac(0)
    return Frac(1, num=(f,), mono=(0, -sa, -sb))


def poch(base: str, s: int, d: int, k: int) -> Frac:
    """(x q^s; q^d)_k for the parameter monomial x named by ``base``."""
    ea, eb = PARAM_EXPONENTS[base]
    out = Frac(1)
    for j in range(k):
        out = out * binomial_factor(ea, eb, s + j * d)
    return out


def qint(m: int) -> Frac:
    """[m] = 1 + q + ... + q^(m-1) as one factor."""
    if m < 1:
        raise ValueError("q-integer needs m >= 1")
    if m == 1:
        return Frac(1)
    return Frac(1, num=(PPoly([1] * m),))


# --- the term language ---------------------------------------------------

@dataclass(frozen=True)
class PochFactor:
    """(x q^base_qexp; q^step)_k in the numerator or denominator, ``power`` times."""

    base_param: str
    base_qexp: int
    step: int
    position: str = "num"
    power: int = 1

    def __post_init__(self) -> None:
        if self.base_param not in PARAM_EXPONENTS:
            raise ValueError(f"unknown base parameter {self.base_param!r}")
        if self.position not in ("num", "den"):
            raise ValueError("position must be 'num' or 'den'")
        if self.step < 1 or self.base_qexp < 0:
            raise ValueError("bad Pochhammer shape")


@dataclass(frozen=True)
class TermSpec:
    """[m k + c] * q^(u k(k+1)/2 + v k) * param_power * prod of PochFactors."""

    linear_factor: tuple[int, int]
    poch_factors: tuple[PochFactor, ...]
    qexp: tuple[int, int] = (0, 0)
    param_power: str = "none"

    def __post_init__(self) -> None:
        if self.param_power not in ("none", "b^k", "b^2k"):
            raise ValueError("param_power must be none, b^k or b^2k")

    def _param_exp(self) -> int:
        return {"none": 0, "b^k": 1, "b^2k": 2}[self.param_power]

    def ratio(self, k: int) -> Frac:
        """term_k / term_{k-1} without the linear factor (k >= 1)."""
        u, v = self.qexp
        out = mono(u * k + v, 0, self._param_exp())
        for pf in self.poch_factors:
            ea, eb = PARAM_EXPONENTS[pf.base_param]
            f = binomial_factor(ea, eb, pf.base_qexp + (k - 1) * pf.step) ** pf.power
            out = out * f if pf.position == "num" else out / f
        return out

    def linear(self, k: int) -> Frac:
        m, c = self.linear_factor
        return qint(m * k + c)


def _sub_b2(pf: PochFactor) -> PochFactor:
    swap = {"b": "b^2", "1/b": "1/b^2"}
    return PochFactor(swap.get(pf.base_param, pf.base_param), pf.base_qexp, pf.step, pf.position, pf.power)


def _pf(base, s, d, pos="num", power=1):
    return PochFactor(base, s, d, pos, power)


_LONG = TermSpec(
    (4, 1),
    (
        _pf("a", 1, 2), _pf("1/a", 1, 2), _pf("1/b", 1, 2), _pf("none", 1, 2),
        _pf("a", 2, 2, "den"), _pf("1/a", 2, 2, "den"), _pf("b", 2, 2, "den"),
        _pf("none", 2, 2, "den"),
    ),
    (0, 0),
    "b^k",
)
_J2L = TermSpec(
    (6, 1),
    (
        _pf("a", 1, 2), _pf("1/a", 1, 2), _pf("none", 1, 2), _pf("1/b", 2, 4),
        _pf("a", 4, 4, "den"), _pf("1/a", 4, 4, "den"), _pf("none", 4, 4, "den"),
        _pf("b", 1, 2, "den"),
    ),
    (2, -1),
    "b^k",
)
_3K1 = TermSpec(
    (3, 1),
    (
        _pf("a", 1, 2), _pf("1/a", 1, 2), _pf("none", 1, 2), _pf("1/b", 1, 1),
        _pf("a", 1, 1, "den"), _pf("1/a", 1, 1, "den"), _pf("none", 1, 1, "den"),
        _pf("b", 2, 2, "den"),
    ),
    (-1, 0),
    "b^k",
)

#: Named summand shapes.  Exponent pairs (u, v) encode u*k(k+1)/2 + v*k:
#: k^2 is (2, -1) and -C(k+1, 2) is (-1, 0).
SPECS: dict[str, TermSpec] = {
    "thm1": TermSpec(
        (4, 1),
        (
            _pf("a", 1, 2), _pf("1/a", 1, 2), _pf("none", 1, 2, power=2),
            _pf("a", 2, 2, "den"), _pf("1/a", 2, 2, "den"), _pf("none", 2, 2, "den", 2),
        ),
    ),
    "thm2": TermSpec(
        (6, 1),
        (
            _pf("a", 1, 2), _pf("1/a", 1, 2), _pf("none", 2, 4),
            _pf("a", 4, 4, "den"), _pf("1/a", 4, 4, "den"), _pf("none", 4, 4, "den"),
        ),
        (2, -1),
    ),
    "thm3": TermSpec(
        (3, 1),
        (
            _pf("a", 1, 2), _pf("1/a", 1, 2), _pf("none", 1, 2),
            _pf("a", 1, 1, "den"), _pf("1/a", 1, 1, "den"), _pf("none", 2, 2, "den"),
        ),
        (-1, 0),
    ),
    "qlong": _LONG,
    "j2l": _J2L,
    "j2l-b2": TermSpec(
        _J2L.linear_factor, tuple(_sub_b2(p) for p in _J2L.poch_factors), _J2L.qexp, "b^2k"
    ),
    "3k1": _3K1,
    "qgw": TermSpec((4, 1), (_pf("none", 1, 2, power=4), _pf("none", 2, 2, "den", 4))),
    "qj2": TermSpec(
        (6, 1),
        (_pf("none", 1, 2, power=2), _pf("none", 2, 4), _pf("none", 4, 4, "den", 3)),
        (2, -1),
    ),
    "qdiv": TermSpec(
        (3, 1),
        (_pf("none", 1, 2, power=3), _pf("none", 1, 1, "den", 2), _pf("none", 2, 2, "den")),
        (-1, 0),
    ),
}


def _spec(spec: Union[str, TermSpec]) -> TermSpec:
    return SPECS[spec] if isinstance(spec, str) else spec


def summand_expr(spec: Union[str, TermSpec], k: int) -> Frac:
    spec = _spec(spec)
    if k < 0:
        raise ValueError("k must be non-negative")
    out = spec.linear(k)
    for j in range(1, k + 1):
        out = out * spec.ratio(j)
    return out


def sum_expr(spec: Union[str, TermSpec], upper: int) -> HyperSum:
    spec = _spec(spec)
    if upper < 0:
        raise ValueError("upper must be non-negative")
    steps = [Frac(1)] + [spec.ratio(k) for k in range(1, upper + 1)]
    extras = [spec.linear(k) for k in range(upper + 1)]
    return HyperSum(steps, extras)


def materialize(expr: Expr) -> PRat:
    """Expand a lazy expression into an (unreduced) PRat."""
    from .engine import SymbolicRing, evaluate

    num, den, _ = evaluate(expr, SymbolicRing())
    return PRat(num, den)


def build_summand(spec: Union[str, TermSpec], k: int, n: int | None = None) -> PRat:
    """The k-th term as a rational function of q, a, b (``n`` is accepted for symmetry)."""
    return materialize(summand_expr(spec, k))


def build_sum(spec: Union[str, TermSpec], n: int | None, upper: int) -> PRat:
    return materialize(sum_expr(spec, upper))


# --- closed forms --------------------------------------------------------

def _check_odd(n: int) -> int:
    if n < 1 or n % 2 == 0:
        raise ValueError(f"n must be a positive odd integer, got {n}")
    return (n - 1) // 2


def _prefactor(n: int, variant: str) -> Frac:
    """q^((1-n)/2) [n], or (-q)^((1-n)/2) [n] for the alternating variant."""
    m = _check_odd(n)
    if variant not in ("plain", "alternating"):
        raise ValueError("variant must be 'plain' or 'alternating'")
    sign = (-1) ** m if variant == "alternating" else 1
    return mono(-m, coeff=sign) * qint(n)


def _pair_factor(n: int) -> Frac:
    """(1 - a q^n)(a - q^n)."""
    return poly({(0, 0, 0): 1, (n, 1, 0): -1}) * poly({(0, 1, 0): 1, (n, 0, 0): -1})


def theorem_rhs_expr(n: int, variant: str = "plain") -> Combo:
    m = _check_odd(n)
    pre = _prefactor(n, variant)
    one_minus_a = poly({(0, 0, 0): 1, (0, 1, 0): -1})
    one_minus_an = poly({(0, 0, 0): 1, (0, n, 0): -1})
    second = pre * _pair_factor(n) / one_minus_a**2
    third = second * mono(0, m, 0, coeff=n) * one_minus_a / one_minus_an
    return Combo([(1, pre), (1, second), (-1, third)])


def rhs_theorem(n: int, variant: str = "plain") -> PRat:
    """q^{(1-n)/2}[n] (1 + (1-aq^n)(a-q^n)/(1-a)^2 (1 - n(1-a)a^{(n-1)/2}/(1-a^n)))."""
    return materialize(theorem_rhs_expr(n, variant))


def _j2_r(n: int) -> int:
    return 1 if n % 4 == 1 else -1


def lemma_rhs_expr(name: str, n: int) -> Frac:
    from .errors import UnknownTarget

    m = _check_odd(n)
    if name == "lem-qlong" or name == "lem-3k1":
        # (b/q)^m (q^2/b; q^2)_m / (b q^2; q^2)_m [n]
        return mono(-m, 0, m) * poch("1/b", 2, 2, m) / poch("b", 2, 2, m) * qint(n)
    if name == "lem-qlong-bqn" or name == "lem-3k1-bqn":
        return poch("none", 1, 2, m) ** 2 * qint(n) / (poch("a", 2, 2, m) * poch("1/a", 2, 2, m))
    if name == "lem-j2":
        r = _j2_r(n)
        t = (n - r) // 4
        return (
            poch("1/b", 2 + r, 4, t) / poch("b", 2 + r, 4, t)
            * mono(0, 0, t) * _prefactor(n, "alternating")
        )
    if name == "lem-j2-b2":
        # the same closed form with b -> b^2
        r = _j2_r(n)
        t = (n - r) // 4
        return (
            poch("1/b^2", 2 + r, 4, t) / poch("b^2", 2 + r, 4, t)
            * mono(0, 0, 2 * t) * _prefactor(n, "alternating")
        )
    if name == "lem-j2-bq2n":
        return (
            poch("none", 1, 2, m) * poch("none", n + 2, 2, m) * qint(n)
            / (poch("a", 4, 4, m) * poch("1/a", 4, 4, m))
        )
    raise UnknownTarget(name)


def rhs_lemma(name: str, n: int) -> PRat:
    return materialize(lemma_rhs_expr(name, n))


def crt_factors(n: int) -> tuple[Frac, Frac]:
    """The two CRT idempotent-like factors from the (a, b) congruence pair.

    (b - q^n)(ab - 1 - a^2 + a q^n) / ((a - b)(1 - ab)) and
    (1 - a q^n)(a - q^n) / ((a - b)(1 - ab)).
    """
    den = poly({(0, 1, 0): 1, (0, 0, 1): -1}) * poly({(0, 0, 0): 1, (0, 1, 1): -1})
    first = poly({(0, 0, 1): 1, (n, 0, 0): -1}) * poly(
        {(0, 1, 1): 1, (0, 0, 0): -1, (0, 2, 0): -1, (n, 1, 0): 1}
    )
    return first / den, _pair_factor(n) / den


def crt_combine_expr(rhs_ab: Frac, rhs_b: Frac, n: int) -> Combo:
    f1, f2 = crt_factors(n)
    parts = []
    if rhs_ab.coeff:
        parts.append((1, rhs_ab * f1))
    if rhs_b.coeff:
        parts.append((1, rhs_b * f2))
    return Combo(parts)


def crt_combine_rhs(rhs_ab: Union[Frac, PRat], rhs_b: Union[Frac, PRat], n: int) -> PRat:
    f1, f2 = (materialize(f) for f in crt_factors(n))
    if isinstance(rhs_ab, Frac):
        rhs_ab = materialize(rhs_ab)
    if isinstance(rhs_b, Frac):
        rhs_b = materialize(rhs_b)
    return rhs_ab * f1 + rhs_b * f2


def qlimit_rhs_expr(n: int, variant: str = "plain") -> Combo:
    pre = _prefactor(n, variant)
    one_minus_q = poly({(0, 0, 0): 1, (1, 0, 0): -1})
    second = pre * qint(n) ** 2 * one_minus_q**2 * Frac(Fraction(n * n - 1, 24))
    return Combo([(1, pre), (1, second)])


def rhs_qlimit(n: int, variant: str = "plain") -> PRat:
    """q^{(1-n)/2}[n] + (n^2-1)(1-q)^2/24 q^{(1-n)/2}[n]^3 (base -q if alternating)."""
    return materialize(qlimit_rhs_expr(n, variant))


def value_at_q1(x: PRat, alpha: RationalLike = 1, beta: RationalLike = 1) -> Fraction:
    """Limit q -> 1 of x specialised at (alpha, beta), cancelling powers of (q - 1)."""
    from .qpoly import QPoly, divrem

    num, den = x.specialize(alpha, beta)
    num_p, den_p = num.base, den.base
    if den_p.is_zero():
        raise ZeroDivisionError("denominator vanishes identically")
    lin = QPoly([-1, 1])
    while den_p.eval(1) == 0:
        qd, rd = divrem(den_p, lin)
        qn, rn = divrem(num_p, lin)
        if not rn.is_zero():
            raise ZeroDivisionError("pole at q = 1")
        den_p, num_p = qd, qn
    return Fraction(num_p.eval(1)) / Fraction(den_p.eval(1))
