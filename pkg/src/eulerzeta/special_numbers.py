"""Bernoulli numbers, Euler numbers of both kinds, and Euler polynomials.

All values are exact Fractions computed from binomial recurrences and
memoized in grow-only tables.  The generating-function route in
:mod:`eulerzeta.powerseries` is kept separate on purpose; tests compare
the two.

Conventions: ``B_1 = -1/2``; ``E*_n`` are the coefficients of
``2/(e^t + 1)``; ``E_n`` are the (integer) coefficients of ``sech t``.
The printed value ``E_6 = 61`` sometimes seen in the literature has the
wrong sign: the recurrence gives ``E_6 = -61``.
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .core_arith import binomial
from .errors import DomainError

__all__ = [
    "NumberKind",
    "NumberTable",
    "bernoulli",
    "euler_first",
    "euler_second",
    "euler_poly",
    "alt_power_sum",
    "second_from_first",
    "number_table",
    "parity_relation",
]


class NumberKind(enum.Enum):
    B = "bernoulli"
    E_STAR = "euler1"
    E_SECOND = "euler2"


@dataclass(frozen=True)
class NumberTable:
    kind: NumberKind
    values: tuple[Fraction, ...]

    @property
    def max_index(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.values[n]


class _GrowingTable:
    """Append-only memo; extension is serialized, reads of built entries are not."""

    def __init__(self, seed: list[Fraction], step: Callable[[list[Fraction], int], Fraction]):
        self._values = list(seed)
        self._step = step
        self._lock = threading.Lock()

    def get(self, n: int) -> Fraction:
        if n < 0:
            raise DomainError(f"index must be non-negative, got {n}")
        if n < len(self._values):
            return self._values[n]
        with self._lock:
            while len(self._values) <= n:
                self._values.append(self._step(self._values, len(self._values)))
        return self._values[n]

    def prefix(self, n: int) -> tuple[Fraction, ...]:
        self.get(n)
        return tuple(self._values[: n + 1])


def _bernoulli_step(b: list[Fraction], n: int) -> Fraction:
    # sum_{k=0}^{n} C(n+1, k) B_k = 0
    if n > 1 and n % 2:
        return Fraction(0)
    s = Fraction(0)
    for k in range(n):
        if b[k]:
            s += binomial(n + 1, k) * b[k]
    return -s / (n + 1)


def _euler_first_step(e: list[Fraction], n: int) -> Fraction:
    # from (e^t + 1) * sum E*_n t^n/n! = 2: 2 E*_n + sum_{l<n} C(n,l) E*_l = 0
    s = Fraction(0)
    for l in range(n):
        if e[l]:
            s += binomial(n, l) * e[l]
    return -s / 2


def _euler_second_step(e: list[Fraction], n: int) -> Fraction:
    # E_{2m} = -sum_{k<m} C(2m, 2k) E_{2k}; odd indices vanish
    if n % 2:
        return Fraction(0)
    return -sum((binomial(n, k) * e[k] for k in range(0, n, 2)), Fraction(0))


_B = _GrowingTable([Fraction(1)], _bernoulli_step)
_ESTAR = _GrowingTable([Fraction(1)], _euler_first_step)
_ESECOND = _GrowingTable([Fraction(1)], _euler_second_step)

_TABLES = {NumberKind.B: _B, NumberKind.E_STAR: _ESTAR, NumberKind.E_SECOND: _ESECOND}


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n."""
    return _B.get(n)


def euler_first(n: int) -> Fraction:
    """First-kind Euler number E*_n (coefficients of 2/(e^t+1))."""
    return _ESTAR.get(n)


def euler_second(n: int) -> Fraction:
    """Second-kind (secant) Euler number E_n; always an integer."""
    return _ESECOND.get(n)


def number_table(kind: NumberKind | str, max_index: int) -> NumberTable:
    if isinstance(kind, str):
        kind = NumberKind(kind)
    return NumberTable(kind, _TABLES[kind].prefix(max_index))


def euler_poly(n: int, x: Fraction | int) -> Fraction:
    """E*_n(x) = sum_k C(n,k) E*_k x^(n-k)."""
    x = Fraction(x)
    return sum((binomial(n, k) * euler_first(k) * x ** (n - k) for k in range(n + 1)), Fraction(0))


def alt_power_sum(n: int, k: int) -> Fraction:
    """2 * sum_{l=0}^{n-1} (-1)^l l^k, with 0^0 = 1."""
    if n < 1:
        raise DomainError("alt_power_sum needs n >= 1")
    return Fraction(2 * sum((-1) ** l * l**k for l in range(n)))


def parity_relation(n: int, k: int) -> tuple[Fraction, Fraction]:
    """Both sides of the shift relation between E*_k(n) and E*_k.

    Even n: ``E*_k(n) - E*_k == -alt_power_sum(n, k)``.
    Odd n:  ``E*_k(n) + E*_k ==  alt_power_sum(n, k)``.
    """
    if n % 2 == 0:
        return euler_poly(k, n) - euler_first(k), -alt_power_sum(n, k)
    return euler_poly(k, n) + euler_first(k), alt_power_sum(n, k)


def second_from_first(k: int) -> Fraction:
    """sum_l C(k,l) 2^l E*_l, which equals E_k."""
    return sum((binomial(k, l) * 2**l * euler_first(l) for l in range(k + 1)), Fraction(0))
