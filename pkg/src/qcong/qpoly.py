"""Dense univariate polynomials and Laurent polynomials in q over the rationals.

Coefficients are stored lowest degree first.  They are ``int`` whenever the
value is integral and :class:`~fractions.Fraction` otherwise, so integral
polynomials (cyclotomic factors, q-integers, Pochhammer products) never pay
for rational arithmetic.

Text rendering is canonical and used by golden tests: terms in ascending
exponent order, ``"1 - q - q^3 + q^4"``, fractional coefficients in
parentheses, ``"(1/2)*q^2"``, negative exponents as ``"q^-3"``.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import DivisionByZeroPoly
from .exact import RationalLike, normalize

__all__ = [
    "QPoly",
    "QLaurent",
    "divrem",
    "gcd",
    "cyclotomic",
    "q_integer",
    "q_binomial",
    "qpoch_pow",
    "divisors",
    "format_coefficient",
]

# Below this size schoolbook multiplication beats packing into big integers.
_KRONECKER_MIN = 24


def format_coefficient(c: RationalLike) -> str:
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"({c})"
    return str(int(c))


def _strip(coeffs: list) -> list:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    del coeffs[n:]
    return coeffs


def _norm_list(coeffs: Iterable) -> list:
    return [normalize(c) for c in coeffs]


def _lcm_den(coeffs: Sequence) -> int:
    m = 1
    for c in coeffs:
        if type(c) is Fraction:
            d = c.denominator
            m = m * d // math.gcd(m, d)
    return m


def _pack(ints: Sequence[int], width: int) -> int:
    """Pack signed ints into one integer, base 2**width (digits offset by 2**(width-1))."""
    nbytes = width // 8
    off = 1 << (width - 1)
    raw = b"".join((c + off).to_bytes(nbytes, "little") for c in ints)
    packed = int.from_bytes(raw, "little")
    return packed - off * _repunit(len(ints), width)


_repunit_cache: dict[tuple[int, int], int] = {}


def _repunit(n: int, width: int) -> int:
    key = (n, width)
    r = _repunit_cache.get(key)
    if r is None:
        r = ((1 << (width * n)) - 1) // ((1 << width) - 1)
        if len(_repunit_cache) < 4096:
            _repunit_cache[key] = r
    return r


def _kronecker_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    ma = max(abs(c) for c in a)
    mb = max(abs(c) for c in b)
    bound = max(ma * mb * min(len(a), len(b)), ma, mb)
    width = bound.bit_length() + 2
    width += -width % 8
    n = len(a) + len(b) - 1
    prod = _pack(a, width) * _pack(b, width)
    off = 1 << (width - 1)
    prod += off * _repunit(n, width)
    nbytes = width // 8
    raw = prod.to_bytes(nbytes * n, "little")
    frm = int.from_bytes
    return [frm(raw[i : i + nbytes], "little") - off for i in range(0, nbytes * n, nbytes)]


def _schoolbook(a: Sequence, b: Sequence) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for j, bj in enumerate(b):
        if not bj:
            continue
        for i, ai in enumerate(a):
            if ai:
                out[i + j] += ai * bj
    return out


def poly_mul(a: Sequence, b: Sequence) -> list:
    """Product of two coefficient lists (no normalisation of the result)."""
    if not a or not b:
        return []
    if len(a) < _KRONECKER_MIN or len(b) < _KRONECKER_MIN:
        return _schoolbook(a, b)
    da, db = _lcm_den(a), _lcm_den(b)
    if da == 1 and db == 1:
        return _kronecker_mul(a, b)
    ia = [int(c * da) for c in a]
    ib = [int(c * db) for c in b]
    scale = da * db
    return [normalize(Fraction(c, scale)) for c in _kronecker_mul(ia, ib)]


class QPoly:
    """Polynomial in q with rational coefficients (``coeffs[i]`` multiplies q**i)."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        self.coeffs = tuple(_strip(_norm_list(coeffs)))
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: list) -> "QPoly":
        """Trusted constructor: ``coeffs`` already normalised; trailing zeros stripped here."""
        obj = object.__new__(cls)
        obj.coeffs = tuple(_strip(coeffs))
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exp: int, coeff: RationalLike = 1) -> "QPoly":
        if exp < 0:
            raise ValueError("negative exponent in QPoly; use QLaurent")
        if not coeff:
            return cls()
        return cls._raw([0] * exp + [normalize(coeff)])

    @classmethod
    def constant(cls, c: RationalLike) -> "QPoly":
        return cls._raw([normalize(c)])

    @classmethod
    def coerce(cls, x: Union["QPoly", RationalLike]) -> "QPoly":
        if isinstance(x, QPoly):
            return x
        return cls.constant(x)

    # -- basic queries -------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> RationalLike:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int) -> RationalLike:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == QPoly.constant(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(("QPoly", self.coeffs))
        return self._hash

    def valuation(self) -> int:
        """Exponent of the lowest nonzero term (q-adic valuation); -1 for zero."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return -1

    # -- ring operations -----------------------------------------------
    def __add__(self, other) -> "QPoly":
        if not isinstance(other, QPoly):
            if isinstance(other, (int, Fraction)):
                other = QPoly.constant(other)
            else:
                return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = normalize(out[i] + c) if c else out[i]
        return QPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly._raw([-c for c in self.coeffs])

    def __sub__(self, other) -> "QPoly":
        if not isinstance(other, QPoly):
            if isinstance(other, (int, Fraction)):
                other = QPoly.constant(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "QPoly":
        return (-self) + other

    def __mul__(self, other) -> "QPoly":
        if isinstance(other, QPoly):
            return QPoly._raw(_norm_list(poly_mul(self.coeffs, other.coeffs)))
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def scale(self, c: RationalLike) -> "QPoly":
        if not c:
            return QPoly()
        return QPoly._raw([normalize(x * c) for x in self.coeffs])

    def __pow__(self, e: int) -> "QPoly":
        if e < 0:
            raise ValueError("negative power")
        result = QPoly.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def shift(self, s: int) -> "QPoly":
        """Multiply by q**s (s >= 0)."""
        if s < 0:
            raise ValueError("negative shift")
        if not self.coeffs or s == 0:
            return self
        return QPoly._raw([0] * s + list(self.coeffs))

    def mul_binomial(self, c: RationalLike, s: int) -> "QPoly":
        """Multiply by (1 - c q**s), the workhorse of q-Pochhammer products."""
        if not c:
            return self
        out = list(self.coeffs) + [0] * s
        for i, x in enumerate(self.coeffs):
            if x:
                out[i + s] -= c * x
        if type(c) is Fraction:
            out = _norm_list(out)
        return QPoly._raw(out)

    def __divmod__(self, other) -> tuple["QPoly", "QPoly"]:
        return divrem(self, other)

    def __floordiv__(self, other) -> "QPoly":
        return divrem(self, other)[0]

    def __mod__(self, other) -> "QPoly":
        return divrem(self, other)[1]

    def monic(self) -> "QPoly":
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        if lc == 1:
            return self
        inv = Fraction(1) / lc
        return self.scale(inv)

    def __call__(self, x: RationalLike) -> RationalLike:
        return self.eval(x)

    def eval(self, x: RationalLike) -> RationalLike:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return normalize(acc)

    def derivative(self) -> "QPoly":
        return QPoly._raw([i * c for i, c in enumerate(self.coeffs)][1:])

    def content_int(self) -> int:
        """gcd of the coefficients of an integral polynomial (0 for zero)."""
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, int(c))
        return g

    def is_integral(self) -> bool:
        return all(type(c) is int for c in self.coeffs)

    # -- rendering -----------------------------------------------------
    def render(self, var: str = "q") -> str:
        return _render_terms(((i, c) for i, c in enumerate(self.coeffs)), var)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"QPoly({self.render()!r})"


def _render_terms(terms: Iterable[tuple[int, RationalLike]], var: str) -> str:
    parts: list[str] = []
    for e, c in terms:
        if not c:
            continue
        neg = c < 0
        mag = -c if neg else c
        if e == 0:
            body = format_coefficient(mag)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if mag == 1 else f"{format_coefficient(mag)}*{mono}"
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts) if parts else "0"


def divrem(x: QPoly, y: QPoly) -> tuple[QPoly, QPoly]:
    """Euclidean division over Q: x = quotient * y + remainder, deg remainder < deg y."""
    if y.is_zero():
        raise DivisionByZeroPoly("division by the zero polynomial")
    dy = y.degree
    if x.degree < dy:
        return QPoly(), x
    r = list(x.coeffs)
    ycoeffs = y.coeffs
    lc = ycoeffs[-1]
    monic_int = lc == 1 and y.is_integral()
    inv = 1 if lc == 1 else Fraction(1) / lc
    q = [0] * (len(r) - dy)
    for i in range(len(r) - 1, dy - 1, -1):
        c = r[i]
        if not c:
            continue
        t = c if monic_int else normalize(c * inv)
        q[i - dy] = t
        base = i - dy
        for j in range(dy):
            yj = ycoeffs[j]
            if yj:
                r[base + j] -= t * yj
        r[i] = 0
    if not monic_int:
        r = _norm_list(r)
    return QPoly._raw(q), QPoly._raw(r[:dy])


def gcd(x: QPoly, y: QPoly) -> QPoly:
    """Monic gcd over Q (zero only if both inputs are zero)."""
    a, b = x, y
    while b:
        a, b = b, divrem(a, b)[1].monic()
    return a.monic()


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


_cyclo_lock = threading.Lock()
_cyclo_cache: dict[int, QPoly] = {}


def cyclotomic(n: int) -> QPoly:
    """Phi_n(q) by exact division: (q^n - 1) / prod_{d | n, d < n} Phi_d."""
    if n < 1:
        raise ValueError("n must be positive")
    cached = _cyclo_cache.get(n)
    if cached is not None:
        return cached
    num = QPoly.monomial(n) - 1
    for d in divisors(n)[:-1]:
        quo, rem = divrem(num, cyclotomic(d))
        assert rem.is_zero()
        num = quo
    with _cyclo_lock:
        return _cyclo_cache.setdefault(n, num)


def q_integer(n: int) -> QPoly:
    """[n] = 1 + q + ... + q^(n-1)."""
    if n < 1:
        raise ValueError("n must be positive")
    return QPoly._raw([1] * n)


def q_binomial(m: int, k: int) -> QPoly:
    """Gaussian binomial [m choose k]_q via the q-Pascal rule; 0 outside 0 <= k <= m."""
    if k < 0 or k > m or m < 0:
        return QPoly()
    k = min(k, m - k)
    # row[j] = [i choose j]; update with [i j] = [i-1 j-1] + q^j [i-1 j]
    row = [QPoly.constant(1)]
    for i in range(1, m + 1):
        new = [QPoly.constant(1)]
        for j in range(1, min(i, k) + 1):
            left = row[j - 1]
            right = row[j].shift(j) if j < len(row) else QPoly()
            new.append(left + right)
        row = new
    return row[k]


def qpoch_pow(s: int, d: int, k: int) -> QPoly:
    """(q^s; q^d)_k = prod_{j<k} (1 - q^(s + j d))."""
    if s < 0:
        raise ValueError("s must be non-negative")
    out = QPoly.constant(1)
    for j in range(k):
        out = out.mul_binomial(1, s + j * d)
    return out


class QLaurent:
    """q**offset * base, with base having nonzero constant term (or zero)."""

    __slots__ = ("base", "offset")

    def __init__(self, base: QPoly | Sequence[RationalLike] = (), offset: int = 0):
        if not isinstance(base, QPoly):
            base = QPoly(base)
        v = base.valuation()
        if v > 0:
            base = QPoly._raw(list(base.coeffs[v:]))
            offset += v
        elif v < 0:
            offset = 0
        self.base = base
        self.offset = offset

    @classmethod
    def monomial(cls, exp: int, coeff: RationalLike = 1) -> "QLaurent":
        return cls(QPoly.constant(coeff), exp)

    @classmethod
    def coerce(cls, x) -> "QLaurent":
        if isinstance(x, QLaurent):
            return x
        if isinstance(x, QPoly):
            return cls(x)
        return cls(QPoly.constant(x))

    def is_zero(self) -> bool:
        return self.base.is_zero()

    def __bool__(self) -> bool:
        return not self.base.is_zero()

    @property
    def min_exp(self) -> int:
        return self.offset

    @property
    def max_exp(self) -> int:
        return self.offset + self.base.degree

    def __eq__(self, other) -> bool:
        if not isinstance(other, QLaurent):
            try:
                other = QLaurent.coerce(other)
            except TypeError:
                return NotImplemented
        return self.base == other.base and (self.is_zero() or self.offset == other.offset)

    def __hash__(self) -> int:
        return hash(("QLaurent", self.base, 0 if self.is_zero() else self.offset))

    def _align(self, other: "QLaurent") -> tuple[QPoly, QPoly, int]:
        lo = min(self.offset, other.offset)
        return self.base.shift(self.offset - lo), other.base.shift(other.offset - lo), lo

    def __add__(self, other) -> "QLaurent":
        other = QLaurent.coerce(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        a, b, lo = self._align(other)
        return QLaurent(a + b, lo)

    __radd__ = __add__

    def __neg__(self) -> "QLaurent":
        return QLaurent(-self.base, self.offset)

    def __sub__(self, other) -> "QLaurent":
        return self + (-QLaurent.coerce(other))

    def __rsub__(self, other) -> "QLaurent":
        return QLaurent.coerce(other) - self

    def __mul__(self, other) -> "QLaurent":
        if isinstance(other, (int, Fraction)):
            return QLaurent(self.base.scale(other), self.offset)
        other = QLaurent.coerce(other)
        return QLaurent(self.base * other.base, self.offset + other.offset)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "QLaurent":
        return QLaurent(self.base**e, self.offset * e)

    def shift(self, s: int) -> "QLaurent":
        return QLaurent(self.base, self.offset + s)

    def to_qpoly(self) -> QPoly:
        """The polynomial q**offset * base; requires offset >= 0 unless zero."""
        if self.is_zero():
            return QPoly()
        if self.offset < 0:
            raise ValueError("Laurent polynomial has negative exponents")
        return self.base.shift(self.offset)

    def eval(self, x: RationalLike) -> RationalLike:
        v = self.base.eval(x)
        if self.offset >= 0:
            return normalize(v * Fraction(x) ** self.offset)
        return normalize(v / Fraction(x) ** (-self.offset))

    def render(self, var: str = "q") -> str:
        return _render_terms(
            ((i + self.offset, c) for i, c in enumerate(self.base.coeffs)), var
        )

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"QLaurent({self.render()!r})"
