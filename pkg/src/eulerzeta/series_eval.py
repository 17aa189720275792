"""Arbitrary-precision numeric oracles for zeta-type series.

Two engines:

* Euler-Maclaurin summation for the positive series zeta(s) and the Hurwitz
  zeta(s, a), with the Bernoulli correction terms taken from the exact
  tables in :mod:`eulerzeta.special_numbers`.
* The Chebyshev alternating-series accelerator of Cohen, Rodriguez Villegas
  and Zagier for eta, the Euler zeta functions and Dirichlet beta.  Its
  weights are integers, so the weighted sum is formed exactly on
  fixed-point terms and divided once.

Every routine works at ``precision + GUARD_BITS`` plus bookkeeping bits and
rounds once.  Only ``s > 0`` (alternating) or ``s > 1`` (Euler-Maclaurin) is
accepted: values at negative integers come from the exact formulas in
:mod:`eulerzeta.zeta_values`, never from divergent series.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .core_arith import GUARD_BITS, BigFloat, pow_real, to_bigfloat
from .errors import ConvergenceError, DomainError
from .special_numbers import bernoulli

__all__ = [
    "EvalRequest",
    "zeta_em",
    "hurwitz_em",
    "eta_accel",
    "euler_zeta_eval",
    "hurwitz_euler_eval",
    "dirichlet_beta_eval",
    "lambda_eval",
    "eq19_residual",
    "alternating_sum",
    "acceleration_terms",
    "numeric_tolerance",
]

Real = BigFloat | Fraction | int | str

LOG2_3_PLUS_SQRT8 = math.log2(3 + math.sqrt(8))


def numeric_tolerance(precision: int) -> Fraction:
    """Acceptance threshold 2**-(precision - 56) for numeric identities."""
    return Fraction(1, 1 << (precision - 56))


@dataclass(frozen=True)
class EvalRequest:
    s: BigFloat
    a: BigFloat
    precision: int

    def __post_init__(self):
        if self.precision < 64:
            raise DomainError("evaluation precision must be at least 64 bits")
        if self.a.sign <= 0:
            raise DomainError("shift a must be positive")

    @classmethod
    def of(cls, s: Real, a: Real = 1, precision: int = 256) -> "EvalRequest":
        return cls(to_bigfloat(s, precision), to_bigfloat(a, precision), precision)


def _exact(x: Real) -> Fraction:
    if isinstance(x, BigFloat):
        return x.to_fraction()
    if isinstance(x, str):
        return Fraction(x)
    return Fraction(x)


def _check_precision(precision: int) -> None:
    if precision < 8:
        raise DomainError("precision must be at least 8 bits")


def _inv_pow_fixed(base: Fraction, s: Fraction, wp: int) -> int:
    """base**(-s) * 2**wp, rounded."""
    if s.denominator == 1:
        k = s.numerator
        num, den = (base.denominator**k, base.numerator**k) if k >= 0 else (
            base.numerator ** (-k),
            base.denominator ** (-k),
        )
        return ((num << wp) + den // 2) // den
    return pow_real(base, -s, wp + 8).to_fixed(wp)


def _fixed_to_bigfloat(x: int, wp: int, precision: int) -> BigFloat:
    return BigFloat.make(x, -wp, precision)


# --------------------------------------------------------------------------
# Euler-Maclaurin


def _pochhammer(s: Fraction, m: int) -> Fraction:
    out = Fraction(1)
    for i in range(m):
        out *= s + i
    return out


def _em_sum(s: Fraction, a: Fraction, precision: int) -> BigFloat:
    """sum_{n>=0} (n + a)**(-s) for s > 1, a > 0."""
    cutoff = max(16, precision // 2)
    cap = cutoff
    # large a makes the value small; carry its size as extra absolute bits
    extra = max(0, math.ceil(float(s) * math.log2(float(a)))) if a > 1 else 0
    wp = precision + GUARD_BITS + cutoff.bit_length() + extra + 8
    total = 0
    for n in range(cutoff):
        total += _inv_pow_fixed(n + a, s, wp)
    big_n = cutoff + a
    p = _inv_pow_fixed(big_n, s, wp)  # N**(-s)
    # N**(1-s)/(s-1) + N**(-s)/2
    tail = Fraction(big_n) / (s - 1) + Fraction(1, 2)
    total += (tail.numerator * p) // tail.denominator
    stop = 1 << max(0, wp - precision - 8)
    prev = None
    for j in range(1, cap + 1):
        c = bernoulli(2 * j) / math.factorial(2 * j) * _pochhammer(s, 2 * j - 1) / big_n ** (2 * j - 1)
        term = (c.numerator * p) // c.denominator if c >= 0 else -((-c.numerator * p) // c.denominator)
        if abs(term) < stop:
            break
        if prev is not None and abs(term) > abs(prev):
            raise ConvergenceError("Euler-Maclaurin terms started growing before convergence")
        total += term
        prev = term
    else:
        raise ConvergenceError(f"Euler-Maclaurin correction cap {cap} reached")
    return _fixed_to_bigfloat(total, wp, precision)


def zeta_em(s: Real, precision: int) -> BigFloat:
    """Riemann zeta(s) for real s > 1 by Euler-Maclaurin summation."""
    _check_precision(precision)
    sf = _exact(s)
    if sf <= 1:
        raise DomainError("zeta_em needs s > 1")
    return _em_sum(sf, Fraction(1), precision)


def hurwitz_em(s: Real, a: Real, precision: int) -> BigFloat:
    """Hurwitz zeta(s, a) = sum_{n>=0} (n+a)**(-s) for s > 1, a > 0."""
    _check_precision(precision)
    sf, af = _exact(s), _exact(a)
    if sf <= 1:
        raise DomainError("hurwitz_em needs s > 1")
    if af <= 0:
        raise DomainError("hurwitz_em needs a > 0")
    return _em_sum(sf, af, precision)


def lambda_eval(s: Real, precision: int) -> BigFloat:
    """Sum over odd m >= 1 of m**(-s), as 2**(-s) * zeta(s, 1/2)."""
    h = hurwitz_em(s, Fraction(1, 2), precision + GUARD_BITS)
    scale = pow_real(2, -_exact(s), precision + GUARD_BITS)
    return (h * scale).with_precision(precision)


# --------------------------------------------------------------------------
# alternating series


def acceleration_terms(precision: int) -> int:
    """Number of terms n with (3 + sqrt 8)**-n below 2**-(precision + 16)."""
    return math.ceil((precision + 16) / LOG2_3_PLUS_SQRT8)


def _chebyshev_weights(n: int) -> tuple[list[int], int]:
    """Integer weights c_k and normalizer d of the accelerator."""
    # d = ((3+sqrt8)^n + (3-sqrt8)^n) / 2 via x_k = 6 x_{k-1} - x_{k-2}
    x0, x1 = 2, 6
    for _ in range(n - 1):
        x0, x1 = x1, 6 * x1 - x0
    d = (x1 if n >= 1 else x0) // 2
    b, c = -1, -d
    weights = []
    for k in range(n):
        c = b - c
        weights.append(c)
        num = 2 * (k + n) * (k - n) * b
        den = (2 * k + 1) * (k + 1)
        b, r = divmod(num, den)
        assert r == 0, "Chebyshev coefficient not integral"
    return weights, d


def alternating_sum(term: Callable[[int, int], int], precision: int, extra_bits: int = 0) -> BigFloat:
    """sum_{k>=0} (-1)**k a_k for a totally monotone a_k.

    ``term(k, wp)`` returns ``a_k * 2**wp`` as an integer.
    """
    _check_precision(precision)
    n = acceleration_terms(precision)
    weights, d = _chebyshev_weights(n)
    wp = precision + GUARD_BITS + n.bit_length() + extra_bits + 4
    acc = sum(c * term(k, wp) for k, c in enumerate(weights))
    return BigFloat.from_fraction(Fraction(acc, d), precision + GUARD_BITS).ldexp(-wp).with_precision(precision)


def _require_positive_s(s: Fraction, name: str) -> None:
    if s <= 0:
        raise DomainError(f"{name} needs s > 0")


def eta_accel(s: Real, precision: int) -> BigFloat:
    """Dirichlet eta(s) = sum_{n>=1} (-1)**(n-1) n**(-s), s > 0."""
    sf = _exact(s)
    _require_positive_s(sf, "eta_accel")
    return alternating_sum(lambda k, wp: _inv_pow_fixed(Fraction(k + 1), sf, wp), precision)


def euler_zeta_eval(s: Real, precision: int) -> BigFloat:
    """zeta_E(s) = 2 sum_{n>=1} (-1)**n n**(-s) = -2 eta(s)."""
    return -eta_accel(s, precision).ldexp(1)


def hurwitz_euler_eval(s: Real, x: Real, precision: int) -> BigFloat:
    """zeta_E(s, x) = 2 sum_{n>=0} (-1)**n (n + x)**(-s), s > 0, x > 0."""
    sf, xf = _exact(s), _exact(x)
    _require_positive_s(sf, "hurwitz_euler_eval")
    if xf <= 0:
        raise DomainError("hurwitz_euler_eval needs x > 0")
    extra = max(0, math.ceil(float(sf) * math.log2(float(xf)))) if xf > 1 else 0
    v = alternating_sum(lambda k, wp: _inv_pow_fixed(k + xf, sf, wp), precision, extra)
    return v.ldexp(1)


def dirichlet_beta_eval(s: Real, precision: int) -> BigFloat:
    """Dirichlet beta(s) = sum_{k>=0} (-1)**k (2k+1)**(-s), s > 0."""
    sf = _exact(s)
    _require_positive_s(sf, "dirichlet_beta_eval")
    return alternating_sum(lambda k, wp: _inv_pow_fixed(Fraction(2 * k + 1), sf, wp), precision)


# --------------------------------------------------------------------------
# cross-route identities


def eq19_residual(s: Real, precision: int) -> BigFloat:
    """|zeta_E(s) - (-2 lambda(s) + 2**(1-s) zeta(s))|, relative when >= 1.

    Left side from the alternating accelerator; right side from
    Euler-Maclaurin (lambda through the Hurwitz shift 1/2).
    """
    wp = precision + GUARD_BITS
    lhs = euler_zeta_eval(s, wp)
    lam = lambda_eval(s, wp)
    z = zeta_em(s, wp)
    rhs = -lam.ldexp(1) + pow_real(2, 1 - _exact(s), wp) * z
    diff = abs(lhs - rhs)
    if abs(rhs) >= 1:
        diff = diff / abs(rhs)
    return diff.with_precision(precision)
