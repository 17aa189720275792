"""p-adic residues, fermionic and Volkenborn Riemann sums, and q-analogues.

Integrals over Z_p are approached through their defining finite sums over
``0 <= x < p**N``; the checks report how many p-adic digits the finite sum
shares with the exact limit.

Two p-adic value types:

* :class:`PadicInt` is an element of Z/p^N (a residue with a depth).
* :class:`PadicNumber` is an element of Q_p known to a fixed absolute
  precision.  It is needed wherever a limit has negative valuation, e.g.
  B_4 at p = 5 or the (1 - q)**-m prefactor of the q-Bernoulli numbers.

Sign and normalization fixes relative to commonly printed forms:

* translation: ``I(f(x+1)) + I(f) = 2 f(0)`` (the variant with ``I(f)`` on
  the right fails for f = 1), and the m-fold shift carries
  ``(-1)**(m-1-l)`` inside the finite sum;
* q-Bernoulli numbers: ``beta_(m,q) = (1-q)**-m [ (q-1)/log q +
  sum_{i=1}^m C(m,i) (-1)**i i/[i]_q ]``, as obtained from the defining
  limit; printed versions without ``(-1)**i`` do not tend to B_m.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .core_arith import GUARD_BITS, BigFloat, binomial, log
from .errors import DepthError, DomainError, NotPadicIntegerError, SingularParameterError
from .special_numbers import bernoulli, euler_first, euler_poly

__all__ = [
    "PadicInt",
    "PadicNumber",
    "QRational",
    "valuation",
    "padic_of_rational",
    "fermionic_sum",
    "volkenborn_riemann_sum",
    "volkenborn_depth",
    "volkenborn_sum",
    "ShiftCheck",
    "fermionic_shift_check",
    "mu_minus_q",
    "mu_minus_q_distribution_check",
    "padic_log",
    "q_number",
    "carlitz_q_bernoulli",
    "q_bosonic_sum",
    "q_zeta_series_part",
    "q_zeta_neg",
    "q_zeta_residual",
    "tan_half_moment_series",
    "cot_half_moment_series",
    "cos_moment_series",
]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


def _check_prime(p: int) -> None:
    if p == 2:
        raise DomainError("only odd primes are supported")
    if not _is_prime(p):
        raise DomainError(f"{p} is not prime")


def _v_int(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def valuation(x: int | Fraction, p: int) -> float | int:
    """v_p of a nonzero rational; ``math.inf`` for zero."""
    x = Fraction(x)
    if x == 0:
        return math.inf
    return _v_int(abs(x.numerator), p) - _v_int(x.denominator, p)


# --------------------------------------------------------------------------
# Z/p^N


@dataclass(frozen=True)
class PadicInt:
    p: int
    N: int
    residue: int

    def __post_init__(self):
        _check_prime(self.p)
        if self.N < 1:
            raise DomainError("depth must be positive")
        object.__setattr__(self, "residue", self.residue % self.p**self.N)

    @property
    def modulus(self) -> int:
        return self.p**self.N

    def valuation(self) -> tuple[int, bool]:
        """``(v, at_least)``; ``at_least`` is set when the residue is zero."""
        if self.residue == 0:
            return self.N, True
        return _v_int(self.residue, self.p), False

    def is_unit(self) -> bool:
        return self.residue % self.p != 0

    def lift(self) -> int:
        return self.residue

    def reduce(self, depth: int) -> "PadicInt":
        if depth > self.N:
            raise DepthError(f"cannot raise depth {self.N} to {depth}")
        return PadicInt(self.p, depth, self.residue)

    def to_number(self) -> "PadicNumber":
        return PadicNumber.of(self.residue, self.p, self.N)

    def _coerce(self, other) -> "PadicInt":
        if isinstance(other, PadicInt):
            if other.p != self.p:
                raise DomainError("mixed primes")
            return other if other.N == self.N else (other.reduce(self.N) if other.N > self.N else other)
        if isinstance(other, (int, Fraction)):
            return padic_of_rational(Fraction(other), self.p, self.N)
        raise TypeError(f"cannot combine PadicInt with {type(other).__name__}")

    def _depth(self, o: "PadicInt") -> int:
        return min(self.N, o.N)

    def __add__(self, other) -> "PadicInt":
        o = self._coerce(other)
        return PadicInt(self.p, self._depth(o), self.residue + o.residue)

    __radd__ = __add__

    def __sub__(self, other) -> "PadicInt":
        o = self._coerce(other)
        return PadicInt(self.p, self._depth(o), self.residue - o.residue)

    def __rsub__(self, other) -> "PadicInt":
        o = self._coerce(other)
        return PadicInt(self.p, self._depth(o), o.residue - self.residue)

    def __neg__(self) -> "PadicInt":
        return PadicInt(self.p, self.N, -self.residue)

    def __mul__(self, other) -> "PadicInt":
        o = self._coerce(other)
        return PadicInt(self.p, self._depth(o), self.residue * o.residue)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "PadicInt":
        o = self._coerce(other)
        if not o.is_unit():
            raise DepthError("division by a non-unit")
        n = self._depth(o)
        return PadicInt(self.p, n, self.residue * pow(o.residue, -1, self.p**n))

    def __pow__(self, k: int) -> "PadicInt":
        if k < 0:
            return PadicInt(self.p, self.N, 1) / PadicInt(self.p, self.N, pow(self.residue, -k, self.modulus))
        return PadicInt(self.p, self.N, pow(self.residue, k, self.modulus))

    def __str__(self) -> str:
        return f"{self.residue} (mod {self.p}^{self.N})"


def padic_of_rational(r: Fraction | int, p: int, N: int) -> PadicInt:
    """The residue mod p^N congruent to ``r``; p must not divide the denominator."""
    r = Fraction(r)
    if r.denominator % p == 0:
        raise NotPadicIntegerError(f"{r} is not a {p}-adic integer")
    m = p**N
    return PadicInt(p, N, r.numerator * pow(r.denominator, -1, m))


# --------------------------------------------------------------------------
# Q_p to fixed absolute precision


@dataclass(frozen=True)
class PadicNumber:
    """An element of Q_p known modulo ``p**abs_prec``.

    ``value`` is the canonical representative: ``u * p**e`` with
    ``e = min(v, 0)`` and ``0 <= u < p**(abs_prec - e)``.
    """

    p: int
    value: Fraction
    abs_prec: int

    @classmethod
    def of(cls, r: Fraction | int, p: int, abs_prec: int) -> "PadicNumber":
        r = Fraction(r)
        v = valuation(r, p)
        if v >= abs_prec:
            return cls(p, Fraction(0), abs_prec)
        e = min(v, 0)
        scaled = r / Fraction(p) ** e
        mod = p ** (abs_prec - e)
        u = scaled.numerator * pow(scaled.denominator, -1, mod) % mod
        return cls(p, Fraction(u) * Fraction(p) ** e, abs_prec)

    def valuation(self) -> int:
        """v_p, capped at the known precision."""
        v = valuation(self.value, self.p)
        return self.abs_prec if v == math.inf else min(v, self.abs_prec)

    def is_known_zero(self) -> bool:
        return self.value == 0

    def _coerce(self, other) -> "PadicNumber":
        if isinstance(other, PadicNumber):
            return other
        if isinstance(other, PadicInt):
            return other.to_number()
        if isinstance(other, (int, Fraction)):
            # exact rationals carry unlimited precision
            return PadicNumber(self.p, Fraction(other), 10**9)
        raise TypeError(f"cannot combine PadicNumber with {type(other).__name__}")

    def __add__(self, other) -> "PadicNumber":
        o = self._coerce(other)
        return PadicNumber.of(self.value + o.value, self.p, min(self.abs_prec, o.abs_prec))

    __radd__ = __add__

    def __sub__(self, other) -> "PadicNumber":
        o = self._coerce(other)
        return PadicNumber.of(self.value - o.value, self.p, min(self.abs_prec, o.abs_prec))

    def __neg__(self) -> "PadicNumber":
        return PadicNumber.of(-self.value, self.p, self.abs_prec)

    def __mul__(self, other) -> "PadicNumber":
        o = self._coerce(other)
        prec = min(self.abs_prec + o.valuation(), o.abs_prec + self.valuation())
        return PadicNumber.of(self.value * o.value, self.p, prec)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "PadicNumber":
        o = self._coerce(other)
        if o.is_known_zero():
            raise DepthError("division by a p-adic number indistinguishable from zero")
        vo = o.valuation()
        prec = min(self.abs_prec, o.abs_prec + self.valuation() - vo) - vo
        return PadicNumber.of(self.value / o.value, self.p, prec)

    def agreement(self, other) -> int:
        """Valuation of the difference, capped at the shared precision."""
        return (self - self._coerce(other)).valuation()

    def __str__(self) -> str:
        return f"{self.value} + O({self.p}^{self.abs_prec})"


# --------------------------------------------------------------------------
# fermionic and Volkenborn sums


def fermionic_sum(n: int, p: int, N: int, x: Fraction | int = 0) -> PadicInt:
    """sum_{y < p^N} (x + y)^n (-1)^y reduced mod p^N.

    Tends to E*_n(x) (E*_n at x = 0) as N grows.
    """
    _check_prime(p)
    if n < 0:
        raise DomainError("moment must be non-negative")
    m = p**N
    x0 = padic_of_rational(x, p, N).residue if x else 0
    s = 0
    for y in range(m):
        t = pow(x0 + y, n, m)
        s += -t if y & 1 else t
    return PadicInt(p, N, s)


def volkenborn_riemann_sum(n: int, p: int, N: int) -> Fraction:
    """(1/p^N) sum_{x < p^N} x^n, exactly."""
    _check_prime(p)
    m = p**N
    return Fraction(sum(x**n for x in range(m)), m)


def volkenborn_depth(n: int, p: int, N: int) -> int:
    """Digits of the Riemann sum guaranteed to match B_n.

    The error sum_{j<n} C(n+1, j)/(n+1) B_j p^(N(n-j)) loses at most one
    digit to a Bernoulli denominator and v_p(n+1) to the 1/(n+1).
    """
    if n == 0:
        return N
    return max(0, N - 1 - _v_int(n + 1, p))


def volkenborn_sum(n: int, p: int, N: int) -> PadicInt:
    """The Volkenborn Riemann sum as a residue at the guaranteed depth."""
    depth = volkenborn_depth(n, p, N)
    if depth < 1:
        raise DepthError(f"no guaranteed digits at N={N} for moment {n}")
    r = volkenborn_riemann_sum(n, p, N)
    if r.denominator % p == 0:
        raise DepthError(f"Riemann sum {r} is not a {p}-adic integer at N={N}")
    return padic_of_rational(r, p, depth)


@dataclass(frozen=True)
class ShiftCheck:
    holds: bool
    valuation: int
    lhs: PadicInt
    rhs: PadicInt


def fermionic_shift_check(n: int, m: int, p: int, N: int) -> ShiftCheck:
    """Fermionic sum of (x+m)^n against (-1)^m I(x^n) + 2 sum_{l<m} (-1)^(m-1-l) l^n."""
    if m < 1:
        raise DomainError("shift must be positive")
    lhs = fermionic_sum(n, p, N, x=m)
    base = fermionic_sum(n, p, N)
    correction = 2 * sum((-1) ** (m - 1 - l) * l**n for l in range(m))
    rhs = base * ((-1) ** m) + correction
    v, _ = (lhs - rhs).valuation()
    return ShiftCheck(lhs == rhs, v, lhs, rhs)


def _q_number_rational(x: int, q: Fraction) -> Fraction:
    if q == 1:
        return Fraction(x)
    return (1 - q**x) / (1 - q)


def _minus_q_number(x: int, q: Fraction) -> Fraction:
    # [x]_{-q} = (1 - (-q)^x) / (1 + q)
    if q == -1:
        raise SingularParameterError("[x]_{-q} is undefined at q = -1")
    val = (1 - (-q) ** x) / (1 + q)
    if val == 0:
        raise SingularParameterError(f"[{x}]_(-q) vanishes at q = {q}")
    return val


def mu_minus_q(a: int, d: int, p: int, N: int, q: Fraction | int) -> Fraction:
    """(-q)^a / [d p^N]_{-q}, the mass of the ball a + d p^N Z_p."""
    q = Fraction(q)
    return (-q) ** a / _minus_q_number(d * p**N, q)


def mu_minus_q_distribution_check(a: int, d: int, p: int, N: int, q: Fraction | int) -> bool:
    """Exact check that the p sub-balls of a + d p^N Z_p carry its full mass."""
    _check_prime(p)
    if d < 1 or d % 2 == 0 or math.gcd(d, p) != 1:
        raise DomainError("d must be odd, positive and prime to p")
    if not 0 <= a < d * p**N:
        raise DomainError("need 0 <= a < d p^N")
    q = Fraction(q)
    step = d * p**N
    lhs = sum((mu_minus_q(a + i * step, d, p, N + 1, q) for i in range(p)), Fraction(0))
    return lhs == mu_minus_q(a, d, p, N, q)


# --------------------------------------------------------------------------
# p-adic logarithm and q-analogues


def padic_log(u: PadicInt, depth: int | None = None) -> PadicInt:
    """Iwasawa logarithm of a unit u = 1 mod p, to ``depth`` digits (default u.N)."""
    p = u.p
    depth = u.N if depth is None else depth
    if depth > u.N:
        raise DepthError("log cannot be more precise than its argument")
    if u.residue % p != 1 % p:
        raise DomainError("padic_log needs u = 1 mod p")
    z = u.residue - 1
    if z == 0:
        return PadicInt(p, depth, 0)
    vz = _v_int(z, p)
    total = Fraction(0)
    k = 1
    # terms z^k/k have valuation >= k*vz - v_p(k), increasing in k
    while k * vz - math.floor(math.log(k, p) + 1e-12) < depth:
        total += Fraction((-1) ** (k + 1) * z**k, k)
        k += 1
    return padic_of_rational(total, p, depth)


QValue = Union[Fraction, PadicInt]


@dataclass(frozen=True)
class QRational:
    """The deformation parameter q, real (rational) or p-adic."""

    q: QValue

    def __post_init__(self):
        if isinstance(self.q, PadicInt):
            if self.q.residue % self.q.p != 1:
                raise DomainError("p-adic q must satisfy |1 - q|_p < 1")
        else:
            object.__setattr__(self, "q", Fraction(self.q))

    @property
    def mode(self) -> str:
        return "padic" if isinstance(self.q, PadicInt) else "real"

    @classmethod
    def coerce(cls, q) -> "QRational":
        return q if isinstance(q, QRational) else cls(q)


def q_number(x: int, q) -> Fraction | PadicInt:
    """[x]_q = (1 - q^x)/(1 - q) for a non-negative integer x."""
    q = QRational.coerce(q)
    if q.mode == "real":
        return _q_number_rational(x, q.q)
    return _padic_q_number(x, q.q)


def _padic_q_number(x: int, q: PadicInt) -> PadicInt:
    r = q.residue
    m = q.modulus
    if r == 1:
        return PadicInt(q.p, q.N, x)
    # (r^x - 1)/(r - 1) computed modulo m * (r - 1), then divided exactly
    big = m * (r - 1)
    return PadicInt(q.p, q.N, ((pow(r, x, big) - 1) % big) // (r - 1))


def carlitz_q_bernoulli(m: int, q, precision: int) -> BigFloat | PadicNumber:
    """Carlitz q-Bernoulli number beta_(m,q).

    (1 - q)^-m [ (q - 1)/log q + sum_{i=1}^m C(m, i) (-1)^i i / [i]_q ].

    Real mode (rational q > 0): BigFloat at ``precision`` bits, with internal
    precision raised to absorb the cancellation near q = 1.  p-adic mode
    (PadicInt q = 1 mod p): PadicNumber whose precision follows from q's depth
    (``precision`` is unused).  At q = 1 exactly the limit B_m is returned.
    """
    if m < 0:
        raise DomainError("m must be non-negative")
    q = QRational.coerce(q)
    if q.mode == "real":
        return _carlitz_real(m, q.q, precision)
    return _carlitz_padic(m, q.q)


def _carlitz_real(m: int, q: Fraction, precision: int) -> BigFloat:
    if q <= 0:
        raise DomainError("real-mode q must be positive")
    if q == 1:
        return BigFloat.from_fraction(bernoulli(m), precision)
    s = Fraction(0)
    for i in range(1, m + 1):
        s += binomial(m, i) * (-1) ** i * Fraction(i) / _q_number_rational(i, q)
    # the bracket is O((q-1)^m): carry that many extra bits
    dist = abs(q - 1)
    lost = max(0, m * math.ceil(-math.log2(dist))) if dist < 1 else 0
    lost += max(0, abs(s.numerator).bit_length() - s.denominator.bit_length())
    wp = precision + GUARD_BITS + lost + 8
    lq = log(q, wp)
    bracket = BigFloat.from_fraction(q - 1, wp) / lq + s
    if bracket.is_zero():
        return BigFloat.zero(precision)
    return (bracket / BigFloat.from_fraction((1 - q) ** m, wp)).with_precision(precision)


def _carlitz_padic(m: int, q: PadicInt) -> PadicNumber:
    p, D = q.p, q.N
    r = q.residue
    if r == 1:
        return PadicNumber.of(bernoulli(m), p, D)
    v1 = _v_int(r - 1, p)
    if v1 >= D:
        raise DepthError("q is indistinguishable from 1 at its depth")
    lg = padic_log(q)
    # (q-1)/log q: both have valuation v1
    ratio = PadicNumber.of(r - 1, p, D) / lg.to_number()
    total = ratio
    for i in range(1, m + 1):
        # i/[i]_q = i (q - 1)/(q^i - 1), both sides of valuation v1 + v_p(i)
        term = PadicNumber.of(i * (r - 1), p, D) / PadicNumber.of(r**i - 1, p, D)
        total = total + term * (binomial(m, i) * (-1) ** i)
    return total / PadicNumber.of((1 - r) ** m, p, D)


def q_bosonic_sum(m: int, p: int, N: int, q, depth: int | None = None) -> PadicNumber:
    """(1/[p^N]_q) sum_{x < p^N} [x]_q^m, the finite q-Volkenborn sum.

    ``q`` is an integer/rational that is 1 mod p, or a PadicInt; ``depth``
    is the working p-adic precision (default: q's depth, or 2N + m + 4).
    At q = 1 this is the ordinary Volkenborn Riemann sum.
    """
    _check_prime(p)
    if isinstance(q, PadicInt):
        D = q.N if depth is None else min(depth, q.N)
        r = q.residue
    else:
        qf = Fraction(q)
        D = depth if depth is not None else 2 * N + m + 4
        r = padic_of_rational(qf, p, D).residue
    if r % p != 1:
        raise DomainError("q must be 1 mod p")
    if r == 1:
        return PadicNumber.of(volkenborn_riemann_sum(m, p, N), p, D)
    mod = p**D
    t = 0
    acc = 0
    for _ in range(p**N):
        acc += pow(t, m, mod)
        t = (1 + r * t) % mod
    # t now holds [p^N]_q
    return PadicNumber.of(acc % mod, p, D) / PadicNumber.of(t, p, D)


# --------------------------------------------------------------------------
# q-zeta diagnostic


def q_zeta_series_part(k: int, q: Fraction) -> Fraction:
    """sum_{n>=1} q^n [n]_q^(k-1) in closed form (0 < q < 1).

    Expanding [n]_q^(k-1) = (1-q)^-(k-1) sum_j C(k-1, j) (-1)^j q^(jn)
    turns the series into geometric sums.
    """
    q = Fraction(q)
    if not 0 < q < 1:
        raise DomainError("need 0 < q < 1")
    total = Fraction(0)
    for j in range(k):
        total += binomial(k - 1, j) * (-1) ** j * q ** (j + 1) / (1 - q ** (j + 1))
    return total / (1 - q) ** (k - 1)


def q_zeta_neg(k: int, q: Fraction, precision: int) -> BigFloat:
    """zeta_q(1-k) = sum_{n>=1} q^n [n]_q^(k-1) - (1/(s-1)) (1-q)^s / log q at s = 1-k."""
    if k < 1:
        raise DomainError("k must be positive")
    q = Fraction(q)
    wp = precision + GUARD_BITS
    series = BigFloat.from_fraction(q_zeta_series_part(k, q), wp)
    s = 1 - k
    pole = BigFloat.from_fraction(Fraction(1, s - 1) * (1 - q) ** s, wp) / log(q, wp)
    return (series - pole).with_precision(precision)


def q_zeta_residual(k: int, q: Fraction | int, precision: int) -> BigFloat:
    """|zeta_q(1-k) + beta_(k,q)/k|, reported as a diagnostic.

    The two normalizations do not match (at k = 1 the residual is exactly 1
    for every q), so callers must not treat this as an identity.
    """
    q = Fraction(q)
    if not 0 < q < 1:
        raise DomainError("need 0 < q < 1")
    wp = precision + GUARD_BITS
    z = q_zeta_neg(k, q, wp)
    b = _carlitz_real(k, q, wp)
    return abs(z + b / k).with_precision(precision)


# --------------------------------------------------------------------------
# trigonometric moment series


def tan_half_moment_series(order: int) -> list[Fraction]:
    """Coefficients in a of sum_n (-1)^(n+1) a^(2n+1) E*_(2n+1) / (2n+1)!.

    This is -I(sin a x) for the fermionic integral; it should equal tan(a/2).
    """
    out = [Fraction(0)] * (order + 1)
    for d in range(1, order + 1, 2):
        n = (d - 1) // 2
        out[d] = (-1) ** (n + 1) * euler_first(d) / math.factorial(d)
    return out


def cos_moment_series(order: int) -> list[Fraction]:
    """Coefficients of I(cos a x) = sum_n (-1)^n a^(2n) E*_(2n)/(2n)!; equals 1."""
    out = [Fraction(0)] * (order + 1)
    for d in range(0, order + 1, 2):
        out[d] = (-1) ** (d // 2) * euler_first(d) / math.factorial(d)
    return out


def cot_half_moment_series(order: int) -> list[Fraction]:
    """Coefficients of sum_n (-1)^n B_(2n) a^(2n) / (2n)!, which is (a/2) cot(a/2)."""
    out = [Fraction(0)] * (order + 1)
    for d in range(0, order + 1, 2):
        out[d] = (-1) ** (d // 2) * bernoulli(d) / math.factorial(d)
    return out


def euler_poly_moment(n: int, x: Fraction | int, p: int, N: int) -> int:
    """Digits shared by the fermionic sum of (x+y)^n and E*_n(x)."""
    s = fermionic_sum(n, p, N, x)
    v, _ = (s - padic_of_rational(euler_poly(n, x), p, N)).valuation()
    return v
