"""Exception hierarchy shared by every module."""


class EulerZetaError(Exception):
    """Base class for all toolkit errors."""


class DomainError(EulerZetaError, ValueError):
    """Argument outside the domain of a numeric function."""


class UsageError(EulerZetaError, ValueError):
    """Malformed request (unknown kind, mismatched orders, bad flags)."""


class SingularDivisionError(EulerZetaError, ZeroDivisionError):
    """Power-series division by a series with zero constant term."""


class SingularParameterError(EulerZetaError, ZeroDivisionError):
    """A q-number or normalizer vanished for the supplied parameter."""


class NotPadicIntegerError(EulerZetaError, ValueError):
    """A rational whose denominator is divisible by p."""


class DepthError(EulerZetaError, ArithmeticError):
    """Not enough p-adic digits left after division by powers of p."""


class ConvergenceError(EulerZetaError, ArithmeticError):
    """A truncated expansion hit its hard term cap before converging."""
