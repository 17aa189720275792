from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from eulerzeta import padic_q as pq
from eulerzeta import powerseries as ps
from eulerzeta.errors import DepthError, DomainError, NotPadicIntegerError, SingularParameterError
from eulerzeta.core_arith import BigFloat
from eulerzeta.padic_q import PadicInt, PadicNumber
from eulerzeta.special_numbers import bernoulli, euler_first

from conftest import to_mpf


# -- PadicInt ---------------------------------------------------------------


@given(st.integers(), st.integers(), st.sampled_from([3, 5, 7, 11]), st.integers(min_value=1, max_value=6))
def test_ring_operations_match_integers(a, b, p, N):
    x, y = PadicInt(p, N, a), PadicInt(p, N, b)
    m = p**N
    assert (x + y).lift() == (a + b) % m
    assert (x - y).lift() == (a - b) % m
    assert (x * y).lift() == (a * b) % m
    if b % p:
        assert ((x / y) * y).lift() == a % m


def test_division_by_non_unit_raises():
    with pytest.raises(DepthError):
        PadicInt(5, 3, 7) / PadicInt(5, 3, 10)


def test_valuation_reports_lower_bound_for_zero():
    assert PadicInt(3, 4, 0).valuation() == (4, True)
    assert PadicInt(3, 4, 18).valuation() == (2, False)


def test_prime_checks():
    with pytest.raises(DomainError):
        PadicInt(4, 2, 1)
    with pytest.raises(DomainError):
        PadicInt(2, 2, 1)  # only odd primes


def test_rational_reduction():
    assert pq.padic_of_rational(Fraction(-1, 2), 3, 2).lift() == 4
    with pytest.raises(NotPadicIntegerError):
        pq.padic_of_rational(Fraction(1, 3), 3, 2)


def test_padic_number_precision_propagation():
    x = PadicNumber.of(Fraction(1, 5), 5, 4)
    assert x.valuation() == -1
    y = x * 25
    assert y.valuation() == 1 and y.abs_prec == 6
    z = PadicNumber.of(10, 5, 4) / PadicNumber.of(5, 5, 4)
    assert z.agreement(2) >= 3


# -- fermionic and Volkenborn sums ----------------------------------------


def test_small_fermionic_example():
    # sum_{x<9} (-1)^x x = 4, and 4 = -1/2 mod 9
    s = pq.fermionic_sum(1, 3, 2)
    assert s.lift() == 4
    assert s == pq.padic_of_rational(Fraction(-1, 2), 3, 2)


@pytest.mark.parametrize("p", [3, 5, 7])
@pytest.mark.parametrize("N", range(1, 7))
def test_fermionic_moments_converge(p, N):
    for n in range(11):
        s = pq.fermionic_sum(n, p, N)
        v, _ = (s - pq.padic_of_rational(euler_first(n), p, N)).valuation()
        assert v >= N


def test_fermionic_sum_matches_direct_sum():
    for n in range(6):
        direct = sum((-1) ** x * x**n for x in range(27))
        assert pq.fermionic_sum(n, 3, 3).lift() == direct % 27


@pytest.mark.parametrize("p", [3, 5])
def test_volkenborn_at_guaranteed_depth(p):
    for N in range(1, 6):
        for n in range(7):
            r = pq.volkenborn_riemann_sum(n, p, N)
            assert pq.valuation(r - bernoulli(n), p) >= pq.volkenborn_depth(n, p, N)


def test_volkenborn_gap_is_one_short_at_p3_n5():
    # (1/3) sum_{x<3} x^5 = 11, B_5 = 0: valuation 0 while N = 1
    assert pq.volkenborn_riemann_sum(5, 3, 1) == 11
    for N in range(1, 6):
        assert pq.valuation(pq.volkenborn_riemann_sum(5, 3, N), 3) == N - 1


def test_volkenborn_sum_residue():
    s = pq.volkenborn_sum(1, 5, 4)
    assert s.N == 3 and s == pq.padic_of_rational(Fraction(-1, 2), 5, 3)
    with pytest.raises(DepthError):
        pq.volkenborn_sum(1, 3, 1)


@pytest.mark.parametrize("p", [3, 5])
def test_shift_identity(p):
    for N in range(1, 5):
        for n in range(9):
            for m in range(1, 5):
                assert pq.fermionic_shift_check(n, m, p, N).holds


def test_euler_polynomial_moments():
    assert pq.euler_poly_moment(4, Fraction(7, 2), 5, 4) >= 4


# -- mu_{-q} ----------------------------------------------------------------


@pytest.mark.parametrize("q", [Fraction(2), Fraction(7, 3), Fraction(-3, 5), Fraction(1)])
@pytest.mark.parametrize("p,d", [(3, 1), (3, 5), (5, 1), (5, 3)])
def test_distribution_relation(q, p, d):
    for N in (1, 2):
        for a in range(d * p**N):
            assert pq.mu_minus_q_distribution_check(a, d, p, N, q)


def test_distribution_parameter_checks():
    with pytest.raises(DomainError):
        pq.mu_minus_q_distribution_check(0, 2, 3, 1, 2)
    with pytest.raises(DomainError):
        pq.mu_minus_q_distribution_check(9, 1, 3, 2, 2)
    with pytest.raises(SingularParameterError):
        pq.mu_minus_q_distribution_check(0, 1, 3, 1, -1)


# -- logarithm and q-numbers -----------------------------------------------


@pytest.mark.parametrize("p", [3, 5, 7])
def test_padic_log_is_a_homomorphism(p):
    u, w = PadicInt(p, 8, 1 + p), PadicInt(p, 8, 1 + 2 * p * p)
    assert pq.padic_log(u * w) == pq.padic_log(u) + pq.padic_log(w)
    assert pq.padic_log(u).valuation() == (1, False)
    with pytest.raises(DomainError):
        pq.padic_log(PadicInt(p, 4, 2))


def test_q_numbers():
    assert pq.q_number(3, Fraction(2)) == 7
    assert pq.q_number(4, Fraction(1)) == 4
    q = PadicInt(5, 6, 6)
    assert pq.q_number(3, q).lift() == (1 + 6 + 36) % 5**6


# -- Carlitz q-Bernoulli numbers -------------------------------------------


def test_beta_zero_and_q_one():
    q = Fraction(1, 2)
    b0 = pq.carlitz_q_bernoulli(0, q, 200)
    assert abs(to_mpf(b0) - (mpmath.mpf(-1) / 2) / mpmath.log(mpmath.mpf(1) / 2)) < mpmath.mpf(2) ** -198
    assert pq.carlitz_q_bernoulli(6, 1, 100) == BigFloat.from_fraction(Fraction(1, 42), 100)


@pytest.mark.parametrize("m", range(9))
def test_q_limit_is_linear(m):
    errs = [abs(to_mpf(pq.carlitz_q_bernoulli(m, 1 + Fraction(1, 10**e), 256)) - mpmath.mpf(bernoulli(m).numerator) / bernoulli(m).denominator) for e in (3, 4, 5)]
    for big, small in zip(errs, errs[1:]):
        assert 5 <= big / small <= 20


def test_real_beta_against_mpmath_definition():
    # direct evaluation of the defining sum with mpmath
    q, m = mpmath.mpf(7) / 5, 4
    s = (q - 1) / mpmath.log(q) + sum(mpmath.binomial(m, i) * (-1) ** i * i * (1 - q) / (1 - q**i) for i in range(1, m + 1))
    ref = s / (1 - q) ** m
    v = pq.carlitz_q_bernoulli(m, Fraction(7, 5), 200)
    assert abs(to_mpf(v) / ref - 1) < mpmath.mpf(2) ** -196


@pytest.mark.parametrize("m", range(5))
def test_padic_beta_cross_check(m):
    p = 5
    beta = pq.carlitz_q_bernoulli(m, PadicInt(p, 24, 1 + p), 0)
    for N in range(1, 6):
        assert pq.q_bosonic_sum(m, p, N, 1 + p).agreement(beta) >= N - m - 1


def test_q_bosonic_at_q_one_is_riemann_sum():
    s = pq.q_bosonic_sum(3, 5, 2, 1, depth=6)
    assert s.value == PadicNumber.of(pq.volkenborn_riemann_sum(3, 5, 2), 5, 6).value


# -- q-zeta diagnostic -----------------------------------------------------


@pytest.mark.parametrize("q", [Fraction(1, 2), Fraction(1, 3), Fraction(9, 10)])
def test_q_zeta_residual_profile(q):
    assert abs(pq.q_zeta_residual(1, q, 200).to_fraction() - 1) < Fraction(1, 2**150)
    for k in range(2, 6):
        assert pq.q_zeta_residual(k, q, 200).to_fraction() < Fraction(1, 2**150)


def test_q_zeta_series_part_closed_form():
    q = Fraction(1, 3)
    direct = sum(q**n * pq.q_number(n, q) ** 2 for n in range(1, 300))
    assert abs(pq.q_zeta_series_part(3, q) - direct) < Fraction(1, 10**100)


# -- trigonometric moments -------------------------------------------------


def test_trigonometric_moment_series():
    n = 30
    tan_half = [c / 2**d for d, c in enumerate(ps.gf_coefficients("tan", n))]
    cot_half = [c / 2**d for d, c in enumerate(ps.gf_coefficients("x_cot_x", n))]
    assert pq.tan_half_moment_series(n) == tan_half
    assert pq.cos_moment_series(n) == [Fraction(int(d == 0)) for d in range(n + 1)]
    assert pq.cot_half_moment_series(n) == cot_half
