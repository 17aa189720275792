import threading
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from eulerzeta import powerseries as ps
from eulerzeta import special_numbers as sn
from eulerzeta.errors import DomainError

# sympy.euler(n) for even n <= 20
E_EVEN = [1, -1, 5, -61, 1385, -50521, 2702765, -199360981, 19391512145, -2404879675441, 370371188237525]
# sympy.euler(n, 0) for odd n <= 15
ESTAR_ODD = ["-1/2", "1/4", "-1/2", "17/8", "-31/2", "691/4", "-5461/2", "929569/16"]


def test_bernoulli_spot_values():
    assert sn.bernoulli(1) == Fraction(-1, 2)
    assert sn.bernoulli(12) == Fraction(-691, 2730)
    assert sn.bernoulli(20) == Fraction(-174611, 330)
    assert all(sn.bernoulli(n) == 0 for n in range(3, 61, 2))


def test_second_kind_against_frozen_table():
    assert [sn.euler_second(2 * k) for k in range(11)] == E_EVEN
    assert sn.euler_second(6) == -61  # the sign is negative
    assert all(sn.euler_second(n) == 0 for n in range(1, 41, 2))


def test_first_kind_against_frozen_table():
    assert [sn.euler_first(2 * k + 1) for k in range(8)] == [Fraction(v) for v in ESTAR_ODD]
    assert all(sn.euler_first(n) == 0 for n in range(2, 41, 2))


@pytest.mark.parametrize(
    "kind,gf,fn",
    [
        ("bernoulli", "bernoulli", sn.bernoulli),
        ("euler1", "euler_first", sn.euler_first),
        ("euler2", "euler_second", sn.euler_second),
    ],
)
def test_recurrence_matches_generating_function(kind, gf, fn):
    table = sn.number_table(kind, 60)
    assert list(table.values) == ps.gf_coefficients(gf, 60)
    assert table.max_index == 60 and table[13] == fn(13)


def test_second_kind_from_first_kind():
    for k in range(61):
        assert sn.second_from_first(k) == sn.euler_second(k)


def test_euler_polynomial_values():
    # sympy euler(n, 7/3)
    want = ["1", "11/6", "28/9", "517/108", "532/81", "3971/486", "7588/729", "280709/17496", "161812/6561"]
    assert [sn.euler_poly(n, Fraction(7, 3)) for n in range(9)] == [Fraction(w) for w in want]


@given(st.integers(min_value=1, max_value=12), st.integers(min_value=0, max_value=14))
def test_parity_relation(n, k):
    lhs, rhs = sn.parity_relation(n, k)
    assert lhs == rhs


@given(st.integers(min_value=0, max_value=20), st.fractions(max_denominator=30, min_value=-5, max_value=5))
def test_euler_polynomial_symmetry(n, x):
    # E*_n(1 - x) = (-1)^n E*_n(x)
    assert sn.euler_poly(n, 1 - x) == (-1) ** n * sn.euler_poly(n, x)


def test_negative_index_rejected():
    with pytest.raises(DomainError):
        sn.bernoulli(-1)


def test_table_is_thread_safe():
    results = []

    def work():
        results.append(sn.number_table("bernoulli", 120).values)

    threads = [threading.Thread(target=work) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(r == results[0] for r in results)
    assert results[0][120] == sn.bernoulli(120)
