"""Exact rationals and arbitrary-precision binary floating point.

Rationals are plain :class:`fractions.Fraction` values.  :class:`BigFloat`
is a sign/significand/exponent triple with an explicit precision in bits;
every operation rounds to nearest (ties to even) exactly once.

The transcendental kernels (pi, log 2, exp, log, atan) work on fixed-point
integers: an integer ``X`` at working precision ``wp`` stands for
``X / 2**wp``.  Public wrappers add :data:`GUARD_BITS` before rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Context, Decimal, ROUND_HALF_EVEN
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .errors import DomainError

__all__ = [
    "Rational",
    "BigFloat",
    "GUARD_BITS",
    "binomial",
    "parse_rational",
    "format_rational",
    "to_bigfloat",
    "pi",
    "ln2",
    "exp",
    "log",
    "sqrt",
    "atan_inv",
    "pow_real",
    "mixed_error",
    "agree",
]

Rational = Fraction

GUARD_BITS = 16

RealLike = Union["BigFloat", Fraction, int, str]


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Parse ``"7/3"``, ``"-0.5"`` or ``"1e-3"`` exactly."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not a rational number: {text!r}") from exc


def format_rational(r: Fraction) -> str:
    return str(Fraction(r))


# --------------------------------------------------------------------------
# rounding core


def _round_man(man: int, exp: int, prec: int) -> tuple[int, int]:
    """Round ``man * 2**exp`` to ``prec`` bits, ties to even, canonical form."""
    if man == 0:
        return 0, 0
    neg = man < 0
    m = -man if neg else man
    bl = m.bit_length()
    if bl > prec:
        shift = bl - prec
        q = m >> shift
        rem = m & ((1 << shift) - 1)
        half = 1 << (shift - 1)
        if rem > half or (rem == half and q & 1):
            q += 1
        m = q
        exp += shift
    # strip trailing zeros so equal values have equal fields
    tz = (m & -m).bit_length() - 1
    m >>= tz
    exp += tz
    return (-m if neg else m), exp


@dataclass(frozen=True, eq=False)
class BigFloat:
    """``man * 2**exp`` carried at ``prec`` bits.

    ``man`` is signed and odd (or zero); construct through :meth:`make`,
    :meth:`from_fraction` or :func:`to_bigfloat` so the canonical form holds.
    """

    man: int
    exp: int
    prec: int

    # -- construction ------------------------------------------------------

    @classmethod
    def make(cls, man: int, exp: int, prec: int) -> "BigFloat":
        if prec < 2:
            raise DomainError(f"precision must be at least 2 bits, got {prec}")
        m, e = _round_man(man, exp, prec)
        return cls(m, e, prec)

    @classmethod
    def from_fraction(cls, r: Fraction | int, prec: int) -> "BigFloat":
        r = Fraction(r)
        num, den = r.numerator, r.denominator
        if num == 0:
            return cls(0, 0, prec)
        if den == 1:
            return cls.make(num, 0, prec)
        # enough quotient bits that the sticky bit sits below the rounding bit
        shift = max(0, prec + 3 - (abs(num).bit_length() - den.bit_length()))
        q, rem = divmod(abs(num) << shift, den)
        man = (q << 1) | (rem != 0)
        return cls.make(man if num > 0 else -man, -shift - 1, prec)

    @classmethod
    def zero(cls, prec: int) -> "BigFloat":
        return cls(0, 0, prec)

    # -- inspection --------------------------------------------------------

    @property
    def sign(self) -> int:
        return (self.man > 0) - (self.man < 0)

    @property
    def significand(self) -> int:
        return abs(self.man)

    @property
    def exponent(self) -> int:
        return self.exp

    @property
    def precision(self) -> int:
        return self.prec

    def is_zero(self) -> bool:
        return self.man == 0

    def is_integer(self) -> bool:
        return self.man == 0 or self.exp >= 0

    def magnitude(self) -> int:
        """Exponent of the leading bit plus one; 2**(m-1) <= |x| < 2**m."""
        if self.man == 0:
            raise DomainError("magnitude of zero")
        return self.exp + abs(self.man).bit_length()

    def to_fraction(self) -> Fraction:
        if self.exp >= 0:
            return Fraction(self.man << self.exp)
        return Fraction(self.man, 1 << -self.exp)

    def to_fixed(self, wp: int) -> int:
        """Nearest integer to ``self * 2**wp`` (ties away from zero)."""
        e = self.exp + wp
        if e >= 0:
            return self.man << e
        m = abs(self.man)
        q = (m + (1 << (-e - 1))) >> -e
        return q if self.man > 0 else -q

    def with_precision(self, prec: int) -> "BigFloat":
        return BigFloat.make(self.man, self.exp, prec)

    def __float__(self) -> float:
        return float(self.to_fraction())

    def __int__(self) -> int:
        return int(self.to_fraction())

    def __bool__(self) -> bool:
        return self.man != 0

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "BigFloat | None":
        if isinstance(other, BigFloat):
            return other
        if isinstance(other, (int, Fraction)):
            return BigFloat.from_fraction(other, self.prec)
        return None

    def __neg__(self) -> "BigFloat":
        return BigFloat(-self.man, self.exp, self.prec)

    def __abs__(self) -> "BigFloat":
        return BigFloat(abs(self.man), self.exp, self.prec)

    def __pos__(self) -> "BigFloat":
        return self

    def __add__(self, other) -> "BigFloat":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _add(self, o, min(self.prec, o.prec))

    __radd__ = __add__

    def __sub__(self, other) -> "BigFloat":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _add(self, -o, min(self.prec, o.prec))

    def __rsub__(self, other) -> "BigFloat":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _add(o, -self, min(self.prec, o.prec))

    def __mul__(self, other) -> "BigFloat":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return BigFloat.make(self.man * o.man, self.exp + o.exp, min(self.prec, o.prec))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "BigFloat":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _div(self, o, min(self.prec, o.prec))

    def __rtruediv__(self, other) -> "BigFloat":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _div(o, self, min(self.prec, o.prec))

    def __pow__(self, n: int) -> "BigFloat":
        if not isinstance(n, int):
            return NotImplemented
        return _int_power(self, n, self.prec)

    def ldexp(self, k: int) -> "BigFloat":
        """Exact multiplication by ``2**k``."""
        if self.man == 0:
            return self
        return BigFloat(self.man, self.exp + k, self.prec)

    # -- exact comparison (no tolerance; use :func:`agree` for that) --------

    def _cmp(self, other) -> int:
        o = self._coerce(other)
        if o is None:
            raise TypeError(f"cannot compare BigFloat with {type(other).__name__}")
        d = self.to_fraction() - o.to_fraction()
        return (d > 0) - (d < 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, (BigFloat, int, Fraction)):
            return NotImplemented
        return self._cmp(other) == 0

    def __lt__(self, other) -> bool:
        return self._cmp(other) < 0

    def __le__(self, other) -> bool:
        return self._cmp(other) <= 0

    def __gt__(self, other) -> bool:
        return self._cmp(other) > 0

    def __ge__(self, other) -> bool:
        return self._cmp(other) >= 0

    def __hash__(self) -> int:
        return hash(self.to_fraction())

    # -- text --------------------------------------------------------------

    def default_digits(self) -> int:
        return max(1, math.floor(self.prec * 0.301) - 2)

    def to_decimal(self, digits: int | None = None) -> str:
        """Decimal string with ``digits`` significant digits (default from prec)."""
        if digits is None:
            digits = self.default_digits()
        if self.man == 0:
            return "0"
        ctx = Context(prec=digits, rounding=ROUND_HALF_EVEN, Emax=10**9, Emin=-(10**9))
        if self.exp >= 0:
            d = ctx.create_decimal(self.man << self.exp)
        else:
            d = ctx.divide(Decimal(self.man), Decimal(1 << -self.exp))
        return str(d)

    def __str__(self) -> str:
        return self.to_decimal()

    def __repr__(self) -> str:
        return f"BigFloat({self.to_decimal(20)}, prec={self.prec})"


def _add(a: BigFloat, b: BigFloat, prec: int) -> BigFloat:
    if b.man == 0:
        return a.with_precision(prec)
    if a.man == 0:
        return b.with_precision(prec)
    top_a = a.magnitude()
    top_b = b.magnitude()
    if top_a < top_b:
        a, b, top_a, top_b = b, a, top_b, top_a
    # b far below a's rounding position: keep only its sign as a sticky bit
    if top_b < top_a - prec - 3:
        pos = min(a.exp, top_a - prec - 4) - 1
        sticky = 1 if b.man > 0 else -1
        return BigFloat.make((a.man << (a.exp - pos)) + sticky, pos, prec)
    e = min(a.exp, b.exp)
    return BigFloat.make((a.man << (a.exp - e)) + (b.man << (b.exp - e)), e, prec)


def _div(a: BigFloat, b: BigFloat, prec: int) -> BigFloat:
    if b.man == 0:
        raise ZeroDivisionError("BigFloat division by zero")
    if a.man == 0:
        return BigFloat.zero(prec)
    na, nb = abs(a.man), abs(b.man)
    shift = max(0, prec + 3 - (na.bit_length() - nb.bit_length()))
    q, rem = divmod(na << shift, nb)
    man = (q << 1) | (rem != 0)
    if (a.man < 0) != (b.man < 0):
        man = -man
    return BigFloat.make(man, a.exp - b.exp - shift - 1, prec)


def _int_power(x: BigFloat, n: int, prec: int) -> BigFloat:
    if n == 0:
        return BigFloat.make(1, 0, prec)
    if x.man == 0:
        if n < 0:
            raise ZeroDivisionError("zero to a negative power")
        return BigFloat.zero(prec)
    if abs(n) <= 4096:
        # exact dyadic power, rounded once
        p = BigFloat(x.man ** abs(n), x.exp * abs(n), 1 << 62)
        if n > 0:
            return p.with_precision(prec)
        return _div(BigFloat(1, 0, prec), p, prec)
    wp = prec + GUARD_BITS + abs(n).bit_length()
    base = x.with_precision(wp)
    if n < 0:
        base = _div(BigFloat(1, 0, wp), base, wp)
        n = -n
    result = BigFloat(1, 0, wp)
    while n:
        if n & 1:
            result = result * base
        base = base * base
        n >>= 1
    return result.with_precision(prec)


def to_bigfloat(x: RealLike | float, prec: int) -> BigFloat:
    """Coerce ``x`` to a BigFloat at ``prec`` bits (strings parse exactly)."""
    if isinstance(x, BigFloat):
        return x.with_precision(prec) if x.prec != prec else x
    if isinstance(x, str):
        return BigFloat.from_fraction(parse_rational(x), prec)
    if isinstance(x, float):
        return BigFloat.from_fraction(Fraction(x), prec)
    return BigFloat.from_fraction(Fraction(x), prec)


# --------------------------------------------------------------------------
# fixed-point kernels


def _tdiv(a: int, b: int) -> int:
    """Division truncating toward zero (b > 0), so alternating terms reach 0."""
    return a // b if a >= 0 else -((-a) // b)


def _atan_inv_fixed(n: int, wp: int) -> int:
    """atan(1/n) * 2**wp, error at most a few units."""
    total = 0
    term = (1 << wp) // n
    n2 = n * n
    k = 0
    while term:
        t = term // (2 * k + 1)
        total += -t if k & 1 else t
        term //= n2
        k += 1
    return total


def _atanh_fixed(num: int, den: int, wp: int) -> int:
    """atanh(num/den) * 2**wp for |num/den| < 1."""
    total = 0
    term = _tdiv(num << wp, den)
    z2n, z2d = num * num, den * den
    k = 0
    while term:
        total += _tdiv(term, 2 * k + 1)
        term = _tdiv(term * z2n, z2d)
        k += 1
    return total


@lru_cache(maxsize=64)
def _pi_fixed(wp: int) -> int:
    w = wp + 10
    v = 4 * (4 * _atan_inv_fixed(5, w) - _atan_inv_fixed(239, w))
    return v >> 10


@lru_cache(maxsize=64)
def _ln2_fixed(wp: int) -> int:
    w = wp + 10
    return (2 * _atanh_fixed(1, 3, w)) >> 10


def _exp_fixed(r: int, wp: int) -> int:
    """exp(r / 2**wp) * 2**wp for |r / 2**wp| <= 1."""
    # halve the argument j times, sum Taylor, then square j times
    j = max(4, int(math.isqrt(wp)) // 2)
    w = wp + j + 8
    x = (r << (w - wp)) >> j
    one = 1 << w
    total = one
    term = one
    k = 1
    while term:
        term = _tdiv(term * x, k << w)
        total += term
        k += 1
    for _ in range(j):
        total = total * total >> w
    return total >> (w - wp)


# --------------------------------------------------------------------------
# public elementary functions


def _arg(x: RealLike, precision: int) -> BigFloat:
    """BigFloat view of an argument; exact inputs get extra bits."""
    if isinstance(x, BigFloat):
        return x
    return to_bigfloat(x, precision + 2 * GUARD_BITS)


def pi(precision: int) -> BigFloat:
    """pi rounded to ``precision`` bits (Machin's formula)."""
    if precision < 8:
        raise DomainError("pi needs at least 8 bits of precision")
    wp = precision + GUARD_BITS
    return BigFloat.make(_pi_fixed(wp), -wp, precision)


def ln2(precision: int) -> BigFloat:
    wp = precision + GUARD_BITS
    return BigFloat.make(_ln2_fixed(wp), -wp, precision)


def atan_inv(n: int, precision: int) -> BigFloat:
    """atan(1/n) for a positive integer ``n``."""
    if n <= 0:
        raise DomainError("atan_inv needs a positive integer")
    wp = precision + GUARD_BITS
    return BigFloat.make(_atan_inv_fixed(n, wp), -wp, precision)


def exp(x: RealLike, precision: int) -> BigFloat:
    """e**x at ``precision`` bits."""
    x = _arg(x, precision)
    if x.man == 0:
        return BigFloat.make(1, 0, precision)
    # k = round(x / ln 2); the remainder lies in [-ln2/2, ln2/2]
    k = round(float(x) / math.log(2)) if x.magnitude() < 1000 else None
    if k is None:
        raise DomainError("exp argument too large")
    wp = precision + GUARD_BITS + max(k, -k).bit_length() + 4
    xf = x.to_fixed(wp)
    r = xf - k * _ln2_fixed(wp)
    e = _exp_fixed(r, wp)
    return BigFloat.make(e, k - wp, precision)


def log(x: RealLike, precision: int) -> BigFloat:
    """Natural logarithm; ``x`` must be positive."""
    if not isinstance(x, BigFloat):
        # an exact input near 1 must keep the digits of x - 1, not just of x
        d = abs((Fraction(x) if isinstance(x, float) else parse_rational(x)) - 1)
        if 0 < d < 1:
            precision_in = precision + d.denominator.bit_length() - d.numerator.bit_length() + 1
            x = _arg(x, precision_in)
    x = _arg(x, precision)
    if x.man <= 0:
        raise DomainError("log of a non-positive number")
    m = x.man
    bl = m.bit_length()
    # x = (m / 2**bl) * 2**E with m / 2**bl in [1/2, 1); move to [1/sqrt2, sqrt2)
    E = x.exp + bl
    b = bl
    if m * m < 1 << (2 * bl - 1):
        E -= 1
        b -= 1
    num = m - (1 << b)
    den = m + (1 << b)
    if num == 0:
        if E == 0:
            return BigFloat.zero(precision)
        wp = precision + GUARD_BITS + max(E, -E).bit_length()
        return BigFloat.make(E * _ln2_fixed(wp), -wp, precision)
    # extra bits keep the relative error bounded when x is close to 1
    extra = max(0, den.bit_length() - abs(num).bit_length())
    wp = precision + GUARD_BITS + extra + max(E, -E).bit_length()
    v = 2 * _atanh_fixed(num, den, wp)
    if E:
        v += E * _ln2_fixed(wp)
    return BigFloat.make(v, -wp, precision)


def sqrt(x: RealLike, precision: int) -> BigFloat:
    """Correctly rounded square root via integer isqrt."""
    x = _arg(x, precision)
    if x.man < 0:
        raise DomainError("sqrt of a negative number")
    if x.man == 0:
        return BigFloat.zero(precision)
    m, e = x.man, x.exp
    if e & 1:
        m <<= 1
        e -= 1
    shift = max(0, 2 * (precision + 3) - m.bit_length() + 2)
    shift += shift & 1
    m <<= shift
    e -= shift
    r = math.isqrt(m)
    man = (r << 1) | (r * r != m)
    return BigFloat.make(man, e // 2 - 1, precision)


def pow_real(x: RealLike, s: RealLike, precision: int) -> BigFloat:
    """x**s = exp(s log x) for positive ``x``."""
    hi = precision + GUARD_BITS
    xb = _arg(x, precision)
    sb = _arg(s, precision)
    if xb.man <= 0:
        raise DomainError("pow_real needs a positive base")
    if sb.is_integer() and (sb.man == 0 or sb.magnitude() <= 13):
        return _int_power(xb, int(sb.to_fraction()), precision)
    if sb.to_fraction() == Fraction(1, 2):
        return sqrt(xb, precision)
    # size of s*log x decides how many absolute bits the exponent needs
    approx = abs(float(sb)) * (abs(xb.magnitude()) + 1)
    extra = max(0, int(approx).bit_length()) + 4
    wp = hi + extra
    lx = log(xb, wp)
    return exp(sb.with_precision(wp) * lx, precision)


# --------------------------------------------------------------------------
# tolerance-based comparison


def mixed_error(computed: BigFloat, target: BigFloat) -> BigFloat:
    """Relative error when |target| >= 1, absolute error otherwise."""
    diff = abs(computed - target)
    if abs(target) >= 1:
        return diff / abs(target)
    return diff


def agree(computed: BigFloat, target: BigFloat, tol: BigFloat | Fraction) -> bool:
    """True when :func:`mixed_error` is at most ``tol``."""
    err = mixed_error(computed, target)
    if isinstance(tol, Fraction):
        return err.to_fraction() <= tol
    return err <= tol
