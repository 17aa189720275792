from fractions import Fraction

import mpmath
import pytest


def to_mpf(x):
    """Exact conversion of a BigFloat (via its rational value) to mpmath."""
    f = x.to_fraction()
    return mpmath.mpf(f.numerator) / f.denominator


def rel_err(x, ref) -> float:
    ref = mpmath.mpf(ref)
    d = abs(to_mpf(x) - ref)
    return float(d / abs(ref)) if abs(ref) >= 1 else float(d)


@pytest.fixture(autouse=True)
def _mp_precision():
    with mpmath.workprec(600):
        yield


@pytest.fixture
def frac():
    return Fraction
