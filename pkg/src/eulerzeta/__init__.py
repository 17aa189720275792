"""Exact Bernoulli/Euler number tables, zeta-type special values, numeric
oracles and p-adic integral checks, with a verification CLI."""

from .core_arith import BigFloat, Rational
from .errors import (
    ConvergenceError,
    DepthError,
    DomainError,
    EulerZetaError,
    NotPadicIntegerError,
    SingularDivisionError,
    SingularParameterError,
    UsageError,
)
from .padic_q import PadicInt, PadicNumber
from .powerseries import TruncatedSeries
from .special_numbers import bernoulli, euler_first, euler_second
from .zeta_values import PiMultiple

__version__ = "0.1.0"

__all__ = [
    "BigFloat",
    "Rational",
    "TruncatedSeries",
    "PiMultiple",
    "PadicInt",
    "PadicNumber",
    "bernoulli",
    "euler_first",
    "euler_second",
    "EulerZetaError",
    "DomainError",
    "UsageError",
    "SingularDivisionError",
    "SingularParameterError",
    "NotPadicIntegerError",
    "DepthError",
    "ConvergenceError",
]
