"""Truncated power series over exact rationals and the generating-function catalog.

A :class:`TruncatedSeries` of order ``n`` holds the coefficients of
``t**0 .. t**n``; nothing above degree ``n`` is ever read or produced.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import SingularDivisionError, UsageError

__all__ = [
    "TruncatedSeries",
    "ps_mul",
    "ps_div",
    "ps_add",
    "ps_scale",
    "exp_series",
    "sin_series",
    "cos_series",
    "gf_coefficients",
    "GF_KINDS",
    "tan_bernoulli_form",
    "tan_euler_form",
]

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class TruncatedSeries:
    coefficients: tuple[Fraction, ...]
    order: int

    def __post_init__(self):
        if self.order < 0:
            raise UsageError("order must be non-negative")
        if len(self.coefficients) != self.order + 1:
            raise UsageError(
                f"order {self.order} needs {self.order + 1} coefficients, "
                f"got {len(self.coefficients)}"
            )

    @classmethod
    def of(cls, coeffs: Iterable, order: int) -> "TruncatedSeries":
        """Build from any iterable, padding with zeros or truncating to ``order``."""
        cs = [Fraction(c) for c in coeffs][: order + 1]
        cs += [ZERO] * (order + 1 - len(cs))
        return cls(tuple(cs), order)

    @classmethod
    def from_function(cls, f: Callable[[int], Fraction], order: int) -> "TruncatedSeries":
        return cls(tuple(Fraction(f(n)) for n in range(order + 1)), order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls.of([1], order)

    def __getitem__(self, n: int) -> Fraction:
        return self.coefficients[n]

    def __len__(self) -> int:
        return self.order + 1

    def __iter__(self):
        return iter(self.coefficients)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return ps_add(self, other)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return ps_add(self, ps_scale(other, -1))

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return ps_mul(self, other)
        return ps_scale(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return ps_div(self, other)

    def shift_down(self) -> "TruncatedSeries":
        """Divide by t; the constant term must be zero.  Order drops by one."""
        if self.coefficients[0] != 0:
            raise SingularDivisionError("cannot divide by t: constant term is nonzero")
        if self.order == 0:
            raise UsageError("cannot divide an order-0 series by t")
        return TruncatedSeries(self.coefficients[1:], self.order - 1)

    def scaled_factorial(self) -> list[Fraction]:
        """``n! * c_n`` for each coefficient (the exponential-generating sequence)."""
        return [c * math.factorial(n) for n, c in enumerate(self.coefficients)]

    def substitute_scale(self, a: Fraction) -> "TruncatedSeries":
        """The series of ``f(a*t)``."""
        a = Fraction(a)
        return TruncatedSeries(tuple(c * a**n for n, c in enumerate(self.coefficients)), self.order)


def _check_orders(a: TruncatedSeries, b: TruncatedSeries) -> int:
    if a.order != b.order:
        raise UsageError(f"order mismatch: {a.order} vs {b.order}")
    return a.order


def ps_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = _check_orders(a, b)
    return TruncatedSeries(tuple(x + y for x, y in zip(a, b)), n)


def ps_scale(a: TruncatedSeries, c) -> TruncatedSeries:
    c = Fraction(c)
    return TruncatedSeries(tuple(c * x for x in a), a.order)


def ps_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the common order."""
    n = _check_orders(a, b)
    ac, bc = a.coefficients, b.coefficients
    out = []
    for k in range(n + 1):
        s = ZERO
        for i in range(k + 1):
            if ac[i] and bc[k - i]:
                s += ac[i] * bc[k - i]
        out.append(s)
    return TruncatedSeries(tuple(out), n)


def ps_div(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Quotient ``q`` with ``q*b == a`` through the common order."""
    n = _check_orders(a, b)
    b0 = b.coefficients[0]
    if b0 == 0:
        raise SingularDivisionError("divisor has zero constant term")
    bc = b.coefficients
    q: list[Fraction] = []
    for k in range(n + 1):
        s = a.coefficients[k]
        for i in range(1, k + 1):
            if bc[i]:
                s -= bc[i] * q[k - i]
        q.append(s / b0)
    return TruncatedSeries(tuple(q), n)


# --------------------------------------------------------------------------
# elementary series


def exp_series(order: int, a: Fraction | int = 1) -> TruncatedSeries:
    """e**(a t)."""
    a = Fraction(a)
    return TruncatedSeries.from_function(lambda n: a**n / math.factorial(n), order)


def sin_series(order: int) -> TruncatedSeries:
    def c(n: int) -> Fraction:
        if n % 2 == 0:
            return ZERO
        return Fraction((-1) ** (n // 2), math.factorial(n))

    return TruncatedSeries.from_function(c, order)


def cos_series(order: int) -> TruncatedSeries:
    def c(n: int) -> Fraction:
        if n % 2:
            return ZERO
        return Fraction((-1) ** (n // 2), math.factorial(n))

    return TruncatedSeries.from_function(c, order)


# --------------------------------------------------------------------------
# generating functions


def _bernoulli_gf(order: int) -> TruncatedSeries:
    # t/(e^t - 1) = 1 / ((e^t - 1)/t); the factor t is cancelled, not limited
    denom = (exp_series(order + 1) - TruncatedSeries.one(order + 1)).shift_down()
    return ps_div(TruncatedSeries.one(order), denom)


def _euler_first_gf(order: int, x: Fraction | None = None) -> TruncatedSeries:
    # 2 e^{xt} / (e^t + 1)
    num = ps_scale(exp_series(order, x if x is not None else 0), 2)
    den = exp_series(order) + TruncatedSeries.one(order)
    return ps_div(num, den)


def _euler_second_gf(order: int) -> TruncatedSeries:
    # 2 e^t / (e^{2t} + 1) = sech t
    num = ps_scale(exp_series(order), 2)
    den = exp_series(order, 2) + TruncatedSeries.one(order)
    return ps_div(num, den)


def _sec_gf(order: int) -> TruncatedSeries:
    return ps_div(TruncatedSeries.one(order), cos_series(order))


def _tan_gf(order: int) -> TruncatedSeries:
    return ps_div(sin_series(order), cos_series(order))


def _x_cot_x_gf(order: int) -> TruncatedSeries:
    # x cos x / sin x with the common x cancelled from sin x
    sin_over_x = sin_series(order + 1).shift_down()
    return ps_div(cos_series(order), sin_over_x)


GF_KINDS = (
    "bernoulli",
    "euler_first",
    "euler_first_poly",
    "euler_second",
    "sec",
    "tan",
    "x_cot_x",
)

_EGF_KINDS = {"bernoulli", "euler_first", "euler_first_poly", "euler_second"}


def gf_coefficients(kind: str, order: int, x: Fraction | int | None = None) -> list[Fraction]:
    """Coefficients of a catalogued generating function through ``t**order``.

    Number kinds (``bernoulli``, ``euler_first``, ``euler_first_poly``,
    ``euler_second``) return ``n! * [t^n]``; ``sec``, ``tan`` and
    ``x_cot_x`` return the raw coefficients.  ``euler_first_poly`` needs the
    rational evaluation point ``x``.
    """
    if order < 1:
        raise UsageError("order must be at least 1")
    if kind == "bernoulli":
        s = _bernoulli_gf(order)
    elif kind == "euler_first":
        s = _euler_first_gf(order)
    elif kind == "euler_first_poly":
        if x is None:
            raise UsageError("euler_first_poly needs an evaluation point x")
        s = _euler_first_gf(order, Fraction(x))
    elif kind == "euler_second":
        s = _euler_second_gf(order)
    elif kind == "sec":
        s = _sec_gf(order)
    elif kind == "tan":
        s = _tan_gf(order)
    elif kind == "x_cot_x":
        s = _x_cot_x_gf(order)
    else:
        raise UsageError(f"unknown generating-function kind {kind!r}; expected one of {GF_KINDS}")
    if kind in _EGF_KINDS:
        return s.scaled_factorial()
    return list(s.coefficients)


def tan_bernoulli_form(order: int, bernoulli: Sequence[Fraction]) -> list[Fraction]:
    """tan x coefficients from Bernoulli numbers: odd degree 2n+1 gets
    (-1)^(n+1) 4^(n+1) (1 - 4^(n+1)) B_(2n+2) / (2n+2)!."""
    out = [ZERO] * (order + 1)
    for d in range(1, order + 1, 2):
        n = (d - 1) // 2
        m = n + 1
        out[d] = Fraction((-1) ** m * 4**m * (1 - 4**m)) * bernoulli[2 * m] / math.factorial(2 * m)
    return out


def tan_euler_form(order: int, euler_first: Sequence[Fraction]) -> list[Fraction]:
    """tan x coefficients from first-kind Euler numbers: odd degree 2n+1 gets
    E*_(2n+1) 2^(2n+1) (-1)^(n+1) / (2n+1)!."""
    out = [ZERO] * (order + 1)
    for d in range(1, order + 1, 2):
        n = (d - 1) // 2
        out[d] = euler_first[d] * 2**d * (-1) ** (n + 1) / math.factorial(d)
    return out
