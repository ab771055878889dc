"""Polynomials in the parameters a, b and in q with such coefficients.

Three layers:

* :class:`MPolyAB` -- sparse polynomial in a, b over Q.
* :class:`PPoly` -- dense in q (Laurent offset allowed), coefficients MPolyAB.
* :class:`PRat` -- lazily normalised quotient of two PPolys.

Divisibility in (Q[a, b])[q] is decided fraction-free by pseudo-division; gcds
use a subresultant remainder sequence in q and recurse into Q[a][b] for contents.

Rendering is canonical: ``"(-1/2)*a^2*b*q^3 + ..."`` ordered by q exponent,
then a, then b, all ascending.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .errors import DivisionByZeroPoly, DivisionByZeroRat
from .exact import RationalLike, normalize
from .qpoly import QLaurent, QPoly, divrem as qdivrem, format_coefficient, gcd as qgcd

__all__ = [
    "MPolyAB",
    "PPoly",
    "PRat",
    "pseudo_divrem",
    "specialize",
    "degree_bounds",
    "ppoly_gcd",
    "mpoly_gcd",
    "A",
    "B",
    "Q",
]

Exp = tuple[int, int]


def _clean(terms: dict) -> dict:
    return {k: normalize(v) for k, v in terms.items() if v}


class MPolyAB:
    """Sparse polynomial in a, b; ``terms[(i, j)]`` multiplies a**i * b**j."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Exp, RationalLike] | None = None):
        self.terms = _clean(dict(terms)) if terms else {}
        for i, j in self.terms:
            if i < 0 or j < 0:
                raise ValueError("negative exponent in MPolyAB")
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "MPolyAB":
        obj = object.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: RationalLike) -> "MPolyAB":
        return cls._raw({(0, 0): normalize(c)} if c else {})

    @classmethod
    def monomial(cls, i: int = 0, j: int = 0, c: RationalLike = 1) -> "MPolyAB":
        return cls({(i, j): c})

    @classmethod
    def coerce(cls, x) -> "MPolyAB":
        if isinstance(x, MPolyAB):
            return x
        return cls.const(x)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_const(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and (0, 0) in self.terms)

    def const_value(self) -> RationalLike:
        return self.terms.get((0, 0), 0)

    @property
    def deg_a(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    @property
    def deg_b(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    def __eq__(self, other) -> bool:
        if isinstance(other, MPolyAB):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == MPolyAB.const(other).terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __add__(self, other) -> "MPolyAB":
        other = MPolyAB.coerce(other)
        if not other.terms:
            return self
        out = dict(self.terms)
        for k, v in other.terms.items():
            w = out.get(k, 0) + v
            if w:
                out[k] = normalize(w)
            else:
                out.pop(k, None)
        return MPolyAB._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "MPolyAB":
        return MPolyAB._raw({k: -v for k, v in self.terms.items()})

    def __sub__(self, other) -> "MPolyAB":
        return self + (-MPolyAB.coerce(other))

    def __rsub__(self, other) -> "MPolyAB":
        return MPolyAB.coerce(other) - self

    def __mul__(self, other) -> "MPolyAB":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, MPolyAB):
            return NotImplemented
        if not self.terms or not other.terms:
            return MPolyAB._raw({})
        out: dict = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return MPolyAB._raw(_clean(out))

    __rmul__ = __mul__

    def scale(self, c: RationalLike) -> "MPolyAB":
        if not c:
            return MPolyAB._raw({})
        return MPolyAB._raw({k: normalize(v * c) for k, v in self.terms.items()})

    def __pow__(self, e: int) -> "MPolyAB":
        out = MPolyAB.const(1)
        for _ in range(e):
            out = out * self
        return out

    def eval(self, alpha: RationalLike = 0, beta: RationalLike = 0) -> RationalLike:
        s = 0
        for (i, j), c in self.terms.items():
            s += c * Fraction(alpha) ** i * Fraction(beta) ** j if (i or j) else c
        return normalize(s)

    def subs_a(self, alpha: RationalLike) -> "MPolyAB":
        out: dict = {}
        for (i, j), c in self.terms.items():
            k = (0, j)
            out[k] = out.get(k, 0) + c * Fraction(alpha) ** i
        return MPolyAB._raw(_clean(out))

    def subs_b(self, beta: RationalLike) -> "MPolyAB":
        out: dict = {}
        for (i, j), c in self.terms.items():
            k = (i, 0)
            out[k] = out.get(k, 0) + c * Fraction(beta) ** j
        return MPolyAB._raw(_clean(out))

    def leading(self) -> tuple[Exp, RationalLike]:
        """Leading term in lex order with b before a."""
        k = max(self.terms, key=lambda e: (e[1], e[0]))
        return k, self.terms[k]

    def exact_div(self, other: "MPolyAB") -> "MPolyAB":
        """Quotient of an exact division; raises ArithmeticError otherwise."""
        if other.is_zero():
            raise DivisionByZeroPoly("division by zero in Q[a, b]")
        if other.is_const():
            return self.scale(Fraction(1) / Fraction(other.const_value()))
        (di, dj), dc = other.leading()
        rem = dict(self.terms)
        quo: dict = {}
        key = lambda e: (e[1], e[0])  # noqa: E731
        while rem:
            (ri, rj) = max(rem, key=key)
            rc = rem[(ri, rj)]
            if ri < di or rj < dj:
                raise ArithmeticError("inexact division in Q[a, b]")
            t = (ri - di, rj - dj)
            tc = normalize(Fraction(rc) / dc) if type(dc) is Fraction or rc % dc else rc // dc
            quo[t] = tc
            for (oi, oj), oc in other.terms.items():
                k = (oi + t[0], oj + t[1])
                w = rem.get(k, 0) - oc * tc
                if w:
                    rem[k] = normalize(w)
                else:
                    rem.pop(k, None)
        return MPolyAB._raw(quo)

    def as_b_poly(self) -> list[QPoly]:
        """Coefficients in b (ascending), each a QPoly in a."""
        db = self.deg_b
        rows: list[list] = [[] for _ in range(db + 1)]
        for (i, j), c in self.terms.items():
            row = rows[j]
            if len(row) <= i:
                row.extend([0] * (i + 1 - len(row)))
            row[i] = c
        return [QPoly(r) for r in rows]

    @classmethod
    def from_b_poly(cls, coeffs: Sequence[QPoly]) -> "MPolyAB":
        terms = {}
        for j, p in enumerate(coeffs):
            for i, c in enumerate(p.coeffs):
                if c:
                    terms[(i, j)] = c
        return cls._raw(terms)

    def render(self) -> str:
        return _render_mono_terms(
            ((0, i, j), c) for (i, j), c in sorted(self.terms.items())
        )

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"MPolyAB({self.render()!r})"


def _render_mono_terms(items: Iterable[tuple[tuple[int, int, int], RationalLike]]) -> str:
    parts: list[str] = []
    for (eq, ea, eb), c in items:
        if not c:
            continue
        vars_ = []
        if ea:
            vars_.append("a" if ea == 1 else f"a^{ea}")
        if eb:
            vars_.append("b" if eb == 1 else f"b^{eb}")
        if eq:
            vars_.append("q" if eq == 1 else f"q^{eq}")
        neg = c < 0
        mag = -c if neg else c
        if not vars_:
            body = format_coefficient(mag)
        elif mag == 1:
            body = "*".join(vars_)
        else:
            body = format_coefficient(mag) + "*" + "*".join(vars_)
        if not parts:
            parts.append("-" + body if neg else body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts) if parts else "0"


# --- gcd in Q[a, b] -----------------------------------------------------

def _qpoly_content(coeffs: Sequence[QPoly]) -> QPoly:
    g = QPoly()
    for c in coeffs:
        if c:
            g = qgcd(g, c)
            if g.degree == 0:
                break
    return g


def _bpoly_prem(f: list[QPoly], g: list[QPoly]) -> list[QPoly]:
    """Pseudo-remainder of f by g, both polynomials in b over Q[a]."""
    r = list(f)
    dg = len(g) - 1
    lc = g[-1]
    while len(r) - 1 >= dg and r:
        t = r[-1]
        shift = len(r) - 1 - dg
        r = [x * lc for x in r]
        for i, gi in enumerate(g):
            r[i + shift] = r[i + shift] - t * gi
        while r and r[-1].is_zero():
            r.pop()
    return r


def mpoly_gcd(x: MPolyAB, y: MPolyAB) -> MPolyAB:
    """gcd in Q[a, b], normalised so the lex-leading coefficient is 1."""
    if x.is_zero():
        return _mpoly_normalize(y)
    if y.is_zero():
        return _mpoly_normalize(x)
    if x.is_const() or y.is_const():
        return MPolyAB.const(1)
    f, g = x.as_b_poly(), y.as_b_poly()
    cf, cg = _qpoly_content(f), _qpoly_content(g)
    cont = qgcd(cf, cg)
    f = [qdivrem(c, cf)[0] for c in f]
    g = [qdivrem(c, cg)[0] for c in g]
    if len(f) < len(g):
        f, g = g, f
    while len(g) > 1:
        r = _bpoly_prem(f, g)
        if not r:
            break
        cr = _qpoly_content(r)
        r = [qdivrem(c, cr)[0] for c in r]
        f, g = g, r
    if len(g) == 1:
        prim = [QPoly.constant(1)]
    else:
        prim = g
    out = MPolyAB.from_b_poly([c * cont for c in prim])
    return _mpoly_normalize(out)


def _mpoly_normalize(x: MPolyAB) -> MPolyAB:
    if x.is_zero():
        return x
    _, c = x.leading()
    return x.scale(Fraction(1) / Fraction(c)) if c != 1 else x


# --- PPoly ---------------------------------------------------------------

_ZERO = MPolyAB._raw({})
_ONE = MPolyAB.const(1)


class PPoly:
    """sum_i coeffs[i] * q**(i + offset) with coefficients in Q[a, b].

    Canonical form: no trailing zero coefficient, and ``offset < 0`` only when
    the lowest coefficient is nonzero (genuine negative powers of q).
    """

    __slots__ = ("coeffs", "offset")

    def __init__(self, coeffs: Iterable = (), offset: int = 0):
        cs = [MPolyAB.coerce(c) for c in coeffs]
        self._set(cs, offset)

    def _set(self, cs: list, offset: int) -> None:
        while cs and cs[-1].is_zero():
            cs.pop()
        if not cs:
            self.coeffs, self.offset = (), 0
            return
        if offset > 0:
            cs = [_ZERO] * offset + cs
            offset = 0
        elif offset < 0:
            lo = 0
            while lo < -offset and cs[lo].is_zero():
                lo += 1
            cs = cs[lo:]
            offset += lo
        self.coeffs = tuple(cs)
        self.offset = offset

    @classmethod
    def _raw(cls, cs: list, offset: int = 0) -> "PPoly":
        obj = object.__new__(cls)
        obj._set(cs, offset)
        return obj

    @classmethod
    def coerce(cls, x) -> "PPoly":
        if isinstance(x, PPoly):
            return x
        if isinstance(x, QLaurent):
            return cls([MPolyAB.const(c) for c in x.base.coeffs], x.offset)
        if isinstance(x, QPoly):
            return cls([MPolyAB.const(c) for c in x.coeffs])
        return cls([MPolyAB.coerce(x)])

    @classmethod
    def from_terms(cls, terms: Mapping[tuple[int, int, int], RationalLike]) -> "PPoly":
        """Build from ``{(q_exp, a_exp, b_exp): coeff}``; q exponents may be negative."""
        if not terms:
            return cls()
        lo = min(e[0] for e in terms)
        hi = max(e[0] for e in terms)
        rows: list[dict] = [{} for _ in range(hi - lo + 1)]
        for (eq, ea, eb), c in terms.items():
            row = rows[eq - lo]
            row[(ea, eb)] = row.get((ea, eb), 0) + c
        return cls._raw([MPolyAB._raw(_clean(r)) for r in rows], lo)

    def terms(self) -> dict[tuple[int, int, int], RationalLike]:
        out = {}
        for i, c in enumerate(self.coeffs):
            for (ea, eb), v in c.terms.items():
                out[(i + self.offset, ea, eb)] = v
        return out

    # -- queries ----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def deg_q(self) -> int:
        return self.offset + len(self.coeffs) - 1 if self.coeffs else -1

    @property
    def lc(self) -> MPolyAB:
        return self.coeffs[-1] if self.coeffs else _ZERO

    def is_param_free(self) -> bool:
        return all(c.is_const() for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PPoly):
            try:
                other = PPoly.coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.offset == other.offset and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.offset, self.coeffs))

    # -- ring operations ----------------------------------------------------
    def __add__(self, other) -> "PPoly":
        other = PPoly.coerce(other)
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        lo = min(self.offset, other.offset)
        hi = max(self.offset + len(self.coeffs), other.offset + len(other.coeffs))
        out = [_ZERO] * (hi - lo)
        for i, c in enumerate(self.coeffs):
            out[i + self.offset - lo] = c
        for i, c in enumerate(other.coeffs):
            k = i + other.offset - lo
            out[k] = out[k] + c if out[k] else c
        return PPoly._raw(out, lo)

    __radd__ = __add__

    def __neg__(self) -> "PPoly":
        return PPoly._raw([-c for c in self.coeffs], self.offset)

    def __sub__(self, other) -> "PPoly":
        return self + (-PPoly.coerce(other))

    def __rsub__(self, other) -> "PPoly":
        return PPoly.coerce(other) - self

    def __mul__(self, other) -> "PPoly":
        if isinstance(other, (int, Fraction, MPolyAB)):
            return self.scale(other)
        if not isinstance(other, PPoly):
            other = PPoly.coerce(other)
        if not self.coeffs or not other.coeffs:
            return PPoly()
        a, b = self.coeffs, other.coeffs
        # accumulate through raw dicts: far cheaper than MPolyAB temporaries
        out: list[dict] = [{} for _ in range(len(a) + len(b) - 1)]
        for j, cb in enumerate(b):
            if not cb.terms:
                continue
            tb = cb.terms.items()
            for i, ca in enumerate(a):
                if not ca.terms:
                    continue
                row = out[i + j]
                for (i1, j1), c1 in ca.terms.items():
                    for (i2, j2), c2 in tb:
                        k = (i1 + i2, j1 + j2)
                        row[k] = row.get(k, 0) + c1 * c2
        return PPoly._raw([MPolyAB._raw(_clean(r)) for r in out], self.offset + other.offset)

    __rmul__ = __mul__

    def scale(self, c) -> "PPoly":
        if isinstance(c, MPolyAB):
            if c.is_zero():
                return PPoly()
            if c.is_const():
                c = c.const_value()
            else:
                return PPoly._raw([x * c for x in self.coeffs], self.offset)
        if not c:
            return PPoly()
        if c == 1:
            return self
        return PPoly._raw([x.scale(c) for x in self.coeffs], self.offset)

    def __pow__(self, e: int) -> "PPoly":
        out = PPoly([1])
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def shift(self, s: int) -> "PPoly":
        if not self.coeffs:
            return self
        return PPoly._raw(list(self.coeffs), self.offset + s)

    def cleared(self) -> tuple["PPoly", int]:
        """(q**s * self with offset 0, s)."""
        if self.offset >= 0:
            return self, 0
        return self.shift(-self.offset), -self.offset

    def content(self) -> MPolyAB:
        g = _ZERO
        for c in self.coeffs:
            if c:
                g = mpoly_gcd(g, c)
                if g.is_const():
                    return _ONE
        return g

    def exact_div_scalar(self, c: MPolyAB) -> "PPoly":
        return PPoly._raw([x.exact_div(c) for x in self.coeffs], self.offset)

    def specialize(self, alpha: RationalLike = 0, beta: RationalLike = 0) -> QLaurent:
        return QLaurent(QPoly([c.eval(alpha, beta) for c in self.coeffs]), self.offset)

    def subs_a(self, alpha: RationalLike) -> "PPoly":
        return PPoly._raw([c.subs_a(alpha) for c in self.coeffs], self.offset)

    def subs_b(self, beta: RationalLike) -> "PPoly":
        return PPoly._raw([c.subs_b(beta) for c in self.coeffs], self.offset)

    def subs_param_qpower(self, param: str, qexp: int) -> "PPoly":
        """Substitute a -> q**qexp (param='a') or b -> q**qexp (param='b')."""
        idx = 0 if param == "a" else 1
        out: dict = {}
        for (eq, ea, eb), c in self.terms().items():
            e = (ea, eb)[idx]
            key = (eq + e * qexp, 0, eb) if idx == 0 else (eq + e * qexp, ea, 0)
            out[key] = out.get(key, 0) + c
        return PPoly.from_terms({k: v for k, v in out.items() if v})

    def to_qlaurent(self) -> QLaurent:
        if not self.is_param_free():
            raise ValueError("polynomial depends on a or b")
        return QLaurent(QPoly([c.const_value() for c in self.coeffs]), self.offset)

    def degree_bounds(self) -> tuple[int, int, int]:
        if not self.coeffs:
            return (-1, -1, -1)
        return (
            self.deg_q,
            max(c.deg_a for c in self.coeffs),
            max(c.deg_b for c in self.coeffs),
        )

    def render(self) -> str:
        items = []
        for i, c in enumerate(self.coeffs):
            for (ea, eb), v in sorted(c.terms.items()):
                items.append(((i + self.offset, ea, eb), v))
        return _render_mono_terms(items)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"PPoly({self.render()!r})"


A = PPoly([MPolyAB.monomial(1, 0)])
B = PPoly([MPolyAB.monomial(0, 1)])
Q = PPoly([0, 1])


def degree_bounds(x: PPoly) -> tuple[int, int, int]:
    """(deg_q, deg_a, deg_b); (-1, -1, -1) for zero."""
    return x.degree_bounds()


def pseudo_divrem(N: PPoly, M: PPoly) -> tuple[PPoly, PPoly, int]:
    """lc(M)**e * N = Q*M + R with deg_q R < deg_q M (division in q over Q[a, b])."""
    if M.is_zero():
        raise DivisionByZeroPoly("pseudo-division by zero")
    if N.offset < 0 or M.offset < 0:
        raise ValueError("clear Laurent offsets before pseudo-division")
    dm = M.deg_q
    lc = M.lc
    lc_unit = lc.is_const()
    lcv = lc.const_value() if lc_unit else None
    mcoeffs = M.coeffs
    r = list(N.coeffs)
    quo: list = [_ZERO] * max(len(r) - dm, 0)
    e = 0
    while len(r) - 1 >= dm and r:
        t = r[-1]
        shift = len(r) - 1 - dm
        if lc_unit:
            if lcv != 1:
                r = [c.scale(lcv) for c in r]
                quo = [c.scale(lcv) for c in quo]
        else:
            r = [c * lc for c in r]
            quo = [c * lc for c in quo]
        quo[shift] = quo[shift] + t
        for i, mi in enumerate(mcoeffs):
            if mi:
                r[i + shift] = r[i + shift] - t * mi
        while r and r[-1].is_zero():
            r.pop()
        e += 1
    return PPoly._raw(quo), PPoly._raw(r), e


def exact_quotient(N: PPoly, M: PPoly) -> PPoly:
    """N / M for exact divisions (offsets may be nonnegative)."""
    Qp, R, e = pseudo_divrem(N, M)
    if not R.is_zero():
        raise ArithmeticError("inexact division in (Q[a,b])[q]")
    if e == 0:
        return Qp
    scale = M.lc ** e
    return Qp.exact_div_scalar(scale)


def primitive_part(x: PPoly) -> PPoly:
    c = x.content()
    if c.is_zero():
        return x
    return x.exact_div_scalar(c)


def ppoly_gcd(x: PPoly, y: PPoly) -> PPoly:
    """gcd in (Q[a, b])[q] via a subresultant PRS; result primitive with normalised lc."""
    x, _ = x.cleared()
    y, _ = y.cleared()
    if x.is_zero():
        return _ppoly_normalize(primitive_part(y)) if y else y
    if y.is_zero():
        return _ppoly_normalize(primitive_part(x))
    cx, cy = x.content(), y.content()
    cont = mpoly_gcd(cx, cy)
    f, g = x.exact_div_scalar(cx), y.exact_div_scalar(cy)
    if f.deg_q < g.deg_q:
        f, g = g, f
    # subresultant PRS (Brown / Collins)
    delta = f.deg_q - g.deg_q
    beta = MPolyAB.const((-1) ** (delta + 1))
    psi = MPolyAB.const(-1)
    while True:
        _, r, e = pseudo_divrem(f, g)
        if e < delta + 1:
            r = r.scale(g.lc ** (delta + 1 - e))
        if r.is_zero():
            break
        r = r.exact_div_scalar(beta)
        lcg = g.lc
        if delta != 1:
            psi = ((-lcg) ** delta).exact_div(psi ** (delta - 1)) if delta else psi
        else:
            psi = -lcg
        f, g = g, r
        delta = f.deg_q - g.deg_q
        beta = (-lcg) * psi**delta
    result = primitive_part(g)
    return _ppoly_normalize(result.scale(cont))


def _ppoly_normalize(x: PPoly) -> PPoly:
    if x.is_zero():
        return x
    _, c = x.lc.leading()
    return x.scale(Fraction(1) / Fraction(c)) if c != 1 else x


def specialize(x: Union[PPoly, "PRat"], alpha: RationalLike = 0, beta: RationalLike = 0):
    """Substitute a = alpha, b = beta; PRats give an unreduced (num, den) pair."""
    if isinstance(x, PRat):
        return x.num.specialize(alpha, beta), x.den.specialize(alpha, beta)
    return PPoly.coerce(x).specialize(alpha, beta)


class PRat:
    """num / den with num, den in (Q[a, b])[q, 1/q]; normalisation is lazy."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num, den = PPoly.coerce(num), PPoly.coerce(den)
        if den.is_zero():
            raise DivisionByZeroRat("zero denominator")
        self.num, self.den = num, den

    @classmethod
    def coerce(cls, x) -> "PRat":
        return x if isinstance(x, PRat) else cls(x)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other) -> "PRat":
        other = PRat.coerce(other)
        if self.den == other.den:
            return PRat(self.num + other.num, self.den)
        return PRat(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "PRat":
        return PRat(-self.num, self.den)

    def __sub__(self, other) -> "PRat":
        return self + (-PRat.coerce(other))

    def __rsub__(self, other) -> "PRat":
        return PRat.coerce(other) - self

    def __mul__(self, other) -> "PRat":
        other = PRat.coerce(other)
        return PRat(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "PRat":
        other = PRat.coerce(other)
        if other.num.is_zero():
            raise DivisionByZeroRat("division by the zero rational function")
        return PRat(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "PRat":
        return PRat.coerce(other) / self

    def __pow__(self, e: int) -> "PRat":
        if e < 0:
            return PRat(self.den**-e, self.num**-e)
        return PRat(self.num**e, self.den**e)

    def __eq__(self, other) -> bool:
        other = PRat.coerce(other)
        return self.num * other.den == other.num * self.den

    __hash__ = None  # type: ignore[assignment]

    def reduce(self) -> "PRat":
        """Lowest terms over Q(a, b): cancel the gcd in (Q[a, b])[q]."""
        if self.num.is_zero():
            return PRat(0)
        num, s1 = self.num.cleared()
        den, s2 = self.den.cleared()
        num, den = num.shift(s2), den.shift(s1)
        g = ppoly_gcd(num, den)
        if g.deg_q > 0 or not g.lc.is_const():
            num = exact_quotient(num, g)
            den = exact_quotient(den, g)
        # remaining parameter-only content of the denominator is a unit
        cd = den.content()
        if not cd.is_const():
            cn = mpoly_gcd(num.content(), cd)
            if not cn.is_const():
                num, den = num.exact_div_scalar(cn), den.exact_div_scalar(cn)
        _, c = den.lc.leading()
        if c != 1:
            inv = Fraction(1) / Fraction(c)
            num, den = num.scale(inv), den.scale(inv)
        return PRat(num, den)

    def specialize(self, alpha: RationalLike = 0, beta: RationalLike = 0):
        return specialize(self, alpha, beta)

    def render(self) -> str:
        return f"({self.num.render()}) / ({self.den.render()})"

    def __repr__(self) -> str:
        return f"PRat({self.render()!r})"
