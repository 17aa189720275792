from fractions import Fraction

import mpmath
import pytest

from eulerzeta import zeta_values as zv
from eulerzeta.errors import DomainError
from eulerzeta.zeta_values import PiMultiple

from conftest import to_mpf


def pm_to_mpf(v: PiMultiple):
    return mpmath.mpf(v.coeff.numerator) / v.coeff.denominator * mpmath.pi**v.power


@pytest.mark.parametrize(
    "value,coeff,power",
    [
        (lambda: zv.zeta_even(1), Fraction(1, 6), 2),
        (lambda: zv.zeta_even(2), Fraction(1, 90), 4),
        (lambda: zv.zeta_even(3), Fraction(1, 945), 6),
        (lambda: zv.euler_zeta_even(1), Fraction(-1, 6), 2),
        (lambda: zv.euler_zeta_even(2), Fraction(-7, 360), 4),
        (lambda: zv.euler_zeta_even(3), Fraction(-31, 15120), 6),
        (lambda: zv.lambda_even(1), Fraction(1, 8), 2),
        (lambda: zv.lambda_even(2), Fraction(1, 96), 4),
        (lambda: zv.beta_odd(0), Fraction(1, 4), 1),
        (lambda: zv.beta_odd(1), Fraction(1, 32), 3),
        (lambda: zv.beta_odd(2), Fraction(5, 1536), 5),
    ],
)
def test_closed_values(value, coeff, power):
    assert value() == PiMultiple(coeff, power)


def test_pi_multiple_formatting():
    assert str(zv.euler_zeta_even(2)) == "-7/360 * pi^4"
    assert str(zv.beta_odd(0)) == "1/4 * pi^1"


@pytest.mark.parametrize("n", range(1, 31))
def test_two_routes_to_even_zeta(n):
    assert zv.zeta_even(n) == zv.zeta_even_via_euler(n)
    assert zv.lambda_even(n) == zv.zeta_even(n).scale(1 - Fraction(1, 4**n))
    assert zv.euler_zeta_even(n) == zv.zeta_even(n).scale(-2 * (1 - Fraction(2, 4**n)))


@pytest.mark.parametrize("n", [1, 2, 5, 9])
def test_against_mpmath(n):
    assert abs(pm_to_mpf(zv.zeta_even(n)) - mpmath.zeta(2 * n)) < mpmath.mpf(2) ** -500
    eta = mpmath.altzeta(2 * n)
    assert abs(pm_to_mpf(zv.euler_zeta_even(n)) + 2 * eta) < mpmath.mpf(2) ** -500
    beta = mpmath.nsum(lambda k: (-1) ** k / (2 * k + 1) ** (2 * n + 1), [0, mpmath.inf])
    assert abs(pm_to_mpf(zv.beta_odd(n)) - beta) < mpmath.mpf(10) ** -40


def test_negative_arguments():
    assert [zv.zeta_neg(n) for n in (1, 2, 3)] == [Fraction(-1, 12), 0, Fraction(1, 120)]
    assert abs(mpmath.mpf(1) / 120 - mpmath.zeta(-3)) < mpmath.mpf(2) ** -590
    # zeta_E(-k) = E*_k
    from eulerzeta.special_numbers import euler_first

    assert all(zv.euler_zeta_neg(k) == euler_first(k) for k in range(40))
    assert zv.euler_zeta_neg(5) == Fraction(-1, 2)


@pytest.mark.parametrize("k", range(1, 41))
def test_bernoulli_secant_identity(k):
    lhs, rhs = zv.mixed_identity_eq21(k)
    assert lhs == rhs
    assert zv.eq20_alt_odd_sum(k) == -zv.beta_odd(k)


def test_identity_at_k1_is_one_24th():
    assert zv.mixed_identity_eq21(1) == (Fraction(1, 24), Fraction(1, 24))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_quarter_hurwitz_relation(n):
    r = zv.corollary2_residual(n, 256)
    assert r.to_fraction() < Fraction(1, 2**200)


def test_pi_multiple_to_bigfloat():
    v = zv.zeta_even(1).to_bigfloat(200)
    assert abs(to_mpf(v) - mpmath.pi**2 / 6) < mpmath.mpf(2) ** -199


def test_domain_checks():
    with pytest.raises(DomainError):
        zv.zeta_even(0)
    with pytest.raises(DomainError):
        zv.beta_odd(-1)
    with pytest.raises(DomainError):
        zv.corollary2_residual(1, 32)
    with pytest.raises(DomainError):
        zv.zeta_even(1) + zv.zeta_even(2)
