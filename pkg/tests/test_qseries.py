from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qgelfand.qseries import (
    NonTerminatingSeries,
    VanishingDenominator,
    q_integer,
    q_pochhammer,
    q_pochhammer_multi,
    terminating_bhs,
)
from qgelfand.scalars import ONE, GaussianRational
from qgelfand.unipoly import UniPoly

from conftest import gaussians

F = Fraction
q_values = st.sampled_from([F(1, 2), F(1, 4), F(2, 3), F(9, 16)])


def test_pochhammer_examples():
    assert q_pochhammer(F(7, 3), F(1, 2), 0) == 1
    assert q_pochhammer(F(1, 2), F(1, 2), 2) == F(3, 8)
    for n in range(1, 5):
        assert q_pochhammer(1, F(1, 3), n) == 0


def test_pochhammer_multi_is_product():
    a, b, q = F(1, 3), GaussianRational(F(1, 2), 1), F(1, 4)
    assert q_pochhammer_multi([a, b], q, 3) == q_pochhammer(a, q, 3) * q_pochhammer(b, q, 3)
    assert q_pochhammer_multi([], q, 3) == ONE


@given(gaussians, q_values, st.integers(min_value=0, max_value=8), st.integers(min_value=0, max_value=8))
def test_pochhammer_splits(a, q, m, n):
    assert q_pochhammer(a, q, m + n) == q_pochhammer(a, q, m) * q_pochhammer(a * q ** m, q, n)


def test_q_integer():
    q = F(1, 3)
    assert q_integer(0, q) == 0
    assert q_integer(1, q) == 1
    assert q_integer(3, F(1, 4)) == F(21, 16)
    with pytest.raises(ValueError):
        q_integer(2, 1)


@given(q_values, st.integers(min_value=0, max_value=10))
def test_q_integer_is_geometric_sum(q, n):
    assert q_integer(n, q) == sum(q ** j for j in range(n))


def test_bhs_trivial_upper_parameter():
    # (1; q)_k vanishes for k >= 1
    assert terminating_bhs([1, F(5, 7)], [F(1, 3)], F(1, 2), F(9, 2)) == 1


def test_bhs_two_term():
    q = F(1, 3)
    x = UniPoly.x()
    p = terminating_bhs([q ** -1, q ** 2], [q], q, x * q)
    assert p == UniPoly([1, -(1 + q)])


def test_bhs_degree_bounded_by_termination():
    q = F(1, 2)
    z = UniPoly.x()
    p = terminating_bhs([q ** -2, F(3, 5), F(7, 3), F(1, 9)], [F(2, 7), F(4, 5), F(5, 11)], q, z)
    assert p.degree <= 2


@given(q_values, st.integers(min_value=0, max_value=6))
def test_bhs_at_zero_is_one(q, n):
    assert terminating_bhs([q ** -n, F(3, 7)], [F(1, 5)], q, 0) == 1


def test_bhs_scalar_matches_polynomial():
    q = F(1, 4)
    num, den = [q ** -3, F(2, 3)], [F(5, 7)]
    poly = terminating_bhs(num, den, q, UniPoly.x())
    for z in [F(0), F(1, 2), F(-3)]:
        assert poly(z) == terminating_bhs(num, den, q, z)


def test_bhs_rejects_non_terminating():
    with pytest.raises(NonTerminatingSeries):
        terminating_bhs([F(3, 7), F(2, 9)], [F(1, 5)], F(1, 2), F(1, 3))


def test_bhs_rejects_vanishing_denominator():
    q = F(1, 2)
    with pytest.raises(VanishingDenominator) as info:
        terminating_bhs([q ** -3], [q ** -1], q, F(1, 3))
    assert info.value.index == 1
