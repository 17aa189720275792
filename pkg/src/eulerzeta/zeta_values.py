"""Closed forms of zeta-type special values as exact rational multiples of pi powers.

Each even-argument value has two or three independent closed forms (one
through Bernoulli numbers, one through first-kind Euler numbers, one through
splitting into odd and even terms).  Functions here return the closed form
named in their docstring; the test suite checks that the routes coincide
componentwise.

Conventions worth knowing:

* ``zeta(-n) = -B_(n+1)/(n+1)``.  A misprint ``-(B_n + 1)/(n + 1)`` is
  sometimes seen; it contradicts the trivial zeros.
* ``beta_odd(0) = pi/4`` extends the Euler-number formula to n = 0.
* ``lambda_even(n)`` sums over *all* odd integers from 1, i.e. it equals
  ``(1 - 4**-n) zeta(2n)``; a lower index of k = 1 on ``1/(2k+1)**(2n)``
  would drop the m = 1 term.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core_arith import GUARD_BITS, BigFloat, pi
from .errors import DomainError
from .series_eval import hurwitz_em, zeta_em
from .special_numbers import bernoulli, euler_first, euler_second

__all__ = [
    "PiMultiple",
    "zeta_even",
    "zeta_even_via_euler",
    "zeta_neg",
    "beta_odd",
    "lambda_even",
    "euler_zeta_even",
    "euler_zeta_neg",
    "eq20_alt_odd_sum",
    "mixed_identity_eq21",
    "corollary2_residual",
]


@dataclass(frozen=True)
class PiMultiple:
    """Exactly ``coeff * pi**power``; equality compares the two fields."""

    coeff: Fraction
    power: int

    def __post_init__(self):
        if self.power < 0:
            raise DomainError("pi power must be non-negative")
        object.__setattr__(self, "coeff", Fraction(self.coeff))

    def __neg__(self) -> "PiMultiple":
        return PiMultiple(-self.coeff, self.power)

    def scale(self, r: Fraction | int) -> "PiMultiple":
        return PiMultiple(self.coeff * Fraction(r), self.power)

    def __add__(self, other: "PiMultiple") -> "PiMultiple":
        # sums are only representable for like powers
        if not isinstance(other, PiMultiple):
            return NotImplemented
        if other.power != self.power:
            raise DomainError("cannot add pi multiples of different powers")
        return PiMultiple(self.coeff + other.coeff, self.power)

    def __sub__(self, other: "PiMultiple") -> "PiMultiple":
        return self + (-other)

    def to_bigfloat(self, precision: int) -> BigFloat:
        wp = precision + GUARD_BITS
        v = BigFloat.from_fraction(self.coeff, wp) * pi(wp) ** self.power
        return v.with_precision(precision)

    def __str__(self) -> str:
        return f"{self.coeff} * pi^{self.power}"


def _positive(n: int, name: str) -> None:
    if n < 1:
        raise DomainError(f"{name} needs a positive integer, got {n}")


def zeta_even(n: int) -> PiMultiple:
    """zeta(2n) = (-1)^(n-1) (2 pi)^(2n) B_(2n) / (2 (2n)!)."""
    _positive(n, "zeta_even")
    c = Fraction((-1) ** (n - 1) * 2 ** (2 * n), 2 * math.factorial(2 * n)) * bernoulli(2 * n)
    return PiMultiple(c, 2 * n)


def zeta_even_via_euler(n: int) -> PiMultiple:
    """zeta(2n) = (-1)^(n-1) (2 pi)^(2n) E*_(2n-1) / (4 (2n-1)! (1 - 4^n))."""
    _positive(n, "zeta_even_via_euler")
    c = Fraction((-1) ** (n - 1) * 2 ** (2 * n), 4 * math.factorial(2 * n - 1) * (1 - 4**n))
    return PiMultiple(c * euler_first(2 * n - 1), 2 * n)


def zeta_neg(n: int) -> Fraction:
    """zeta(-n) = -B_(n+1)/(n+1)."""
    _positive(n, "zeta_neg")
    return -bernoulli(n + 1) / (n + 1)


def beta_odd(n: int) -> PiMultiple:
    """beta(2n+1) = (-1)^n E_(2n) pi^(2n+1) / (2 (2n)! 2^(2n+1)), n >= 0."""
    if n < 0:
        raise DomainError("beta_odd needs n >= 0")
    c = Fraction((-1) ** n, 2 * math.factorial(2 * n) * 2 ** (2 * n + 1)) * euler_second(2 * n)
    return PiMultiple(c, 2 * n + 1)


def lambda_even(n: int) -> PiMultiple:
    """Sum over odd m >= 1 of m^(-2n) = (-1)^n (2 pi)^(2n) E*_(2n-1) / (4^(n+1) (2n-1)!)."""
    _positive(n, "lambda_even")
    c = Fraction((-1) ** n * 2 ** (2 * n), 4 ** (n + 1) * math.factorial(2 * n - 1))
    return PiMultiple(c * euler_first(2 * n - 1), 2 * n)


def euler_zeta_even(n: int) -> PiMultiple:
    """zeta_E(2n) = (-1)^(n-1) pi^(2n) (2 - 4^n) E*_(2n-1) / (2 (2n-1)! (1 - 4^n))."""
    _positive(n, "euler_zeta_even")
    c = Fraction((-1) ** (n - 1) * (2 - 4**n), 2 * math.factorial(2 * n - 1) * (1 - 4**n))
    return PiMultiple(c * euler_first(2 * n - 1), 2 * n)


def euler_zeta_neg(k: int) -> Fraction:
    """zeta_E(-k) = E*_k, computed as 2 (1 - 2^(k+1)) B_(k+1) / (k+1)."""
    if k < 0:
        raise DomainError("euler_zeta_neg needs k >= 0")
    return 2 * (1 - 2 ** (k + 1)) * bernoulli(k + 1) / (k + 1)


def eq20_alt_odd_sum(k: int) -> PiMultiple:
    """sum_{n>=1} (-1)^n / (2n-1)^(2k+1) through Bernoulli numbers.

    (-1)^k pi^(2k+1) [ sum_{j<k} (2^(2k-2j) - 2) B_(2k-2j) / ((2j+1)! (2k-2j)! 2^(2j+2))
                       - 1/((2k+1)! 2^(2k+2)) ].
    The value is -beta(2k+1).
    """
    _positive(k, "eq20_alt_odd_sum")
    inner = _eq21_lhs(k) - Fraction(1, math.factorial(2 * k + 1) * 2 ** (2 * k + 2))
    return PiMultiple((-1) ** k * inner, 2 * k + 1)


def _eq21_lhs(k: int) -> Fraction:
    total = Fraction(0)
    for j in range(k):
        m = 2 * k - 2 * j
        total += Fraction(2**m - 2, math.factorial(2 * j + 1) * math.factorial(m) * 2 ** (2 * j + 2)) * bernoulli(m)
    return total


def mixed_identity_eq21(k: int) -> tuple[Fraction, Fraction]:
    """Both sides of the Bernoulli/secant-number identity at ``k``.

    lhs = sum_{j<k} (2^(2k-2j) - 2) B_(2k-2j) / ((2j+1)! (2k-2j)! 2^(2j+2))
    rhs = 1/((2k+1)! 2^(2k+2)) - E_(2k) / (2^(2k+2) (2k)!)
    """
    _positive(k, "mixed_identity_eq21")
    rhs = Fraction(1, math.factorial(2 * k + 1) * 2 ** (2 * k + 2)) - euler_second(2 * k) / (
        2 ** (2 * k + 2) * math.factorial(2 * k)
    )
    return _eq21_lhs(k), rhs


def corollary2_residual(n: int, precision: int) -> BigFloat:
    """|zeta(2n+1, 1/4) + 2^(2n) (1 - 2^(2n+1)) zeta(2n+1) - (-1)^n E_(2n) pi^(2n+1) 2^(2n) / (2 (2n)!)|.

    zeta(2n+1) has no closed form, so this is a numeric residual built from
    the Euler-Maclaurin oracles; it is absolute (the terms are of size 4**(2n+1)).
    """
    _positive(n, "corollary2_residual")
    if precision < 64:
        raise DomainError("corollary2_residual needs at least 64 bits")
    s = 2 * n + 1
    # the two zeta terms nearly cancel; carry their size as extra bits
    wp = precision + GUARD_BITS + 2 * s + 8
    h = hurwitz_em(s, Fraction(1, 4), wp)
    z = zeta_em(s, wp)
    closed = PiMultiple(
        Fraction((-1) ** n * 2 ** (2 * n), 2 * math.factorial(2 * n)) * euler_second(2 * n), s
    ).to_bigfloat(wp)
    r = h + z * (2 ** (2 * n) * (1 - 2**s)) - closed
    return abs(r).with_precision(precision)
