from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qgelfand.scalars import (
    I,
    ONE,
    ZERO,
    GaussianRational,
    QParameter,
    as_scalar,
    format_rational,
    parse_half_integer,
    parse_rational,
)

from conftest import gaussians, nonzero_gaussians, rationals


def test_format_always_writes_denominator():
    assert format_rational(3) == "3/1"
    assert format_rational(Fraction(-6, 4)) == "-3/2"
    assert format_rational(0) == "0/1"


def test_parse_rational_forms():
    assert parse_rational("1/2") == Fraction(1, 2)
    assert parse_rational(" 6/4 ") == Fraction(3, 2)
    assert parse_rational("-7") == -7
    for bad in ["", "1/0", "a/b", "1/2/3", "0.5"]:
        with pytest.raises(ValueError):
            parse_rational(bad)


def test_parse_half_integer():
    assert parse_half_integer("1/2") == Fraction(1, 2)
    assert parse_half_integer("2") == 2
    assert parse_half_integer("4/2") == 2
    with pytest.raises(ValueError):
        parse_half_integer("1/3")


def test_gaussian_serialisation():
    z = GaussianRational(Fraction(1, 2), Fraction(-3, 4))
    assert str(z) == "1/2|-3/4"
    assert GaussianRational.parse(str(z)) == z
    assert GaussianRational.parse("5/3") == Fraction(5, 3)


@given(gaussians)
def test_parse_roundtrip(z):
    assert GaussianRational.parse(str(z)) == z


def test_imaginary_unit():
    assert I * I == -ONE
    assert I.conjugate() == -I
    assert (ONE + I).norm2() == 2


@given(gaussians, gaussians)
def test_add_sub_exact(a, b):
    assert (a + b) - b == a


@given(gaussians, nonzero_gaussians)
def test_mul_div_exact(a, b):
    assert (a * b) / b == a


@given(gaussians, gaussians, gaussians)
def test_ring_laws(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a


@given(gaussians)
def test_conjugation_involution_and_norm(z):
    assert z.conjugate().conjugate() == z
    n = z.norm2()
    assert n >= 0
    assert (n == 0) == (not z)
    assert z * z.conjugate() == n


@given(gaussians, st.integers(min_value=0, max_value=6))
def test_integer_powers(z, n):
    expected = ONE
    for _ in range(n):
        expected = expected * z
    assert z ** n == expected


@given(nonzero_gaussians, st.integers(min_value=1, max_value=5))
def test_negative_powers(z, n):
    assert z ** -n * z ** n == ONE


@given(rationals, rationals)
def test_mixed_operands(a, b):
    z = GaussianRational(a)
    assert z + b == a + b
    assert b - z == b - a
    assert z * 3 == 3 * a


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


def test_floats_rejected():
    with pytest.raises(TypeError):
        as_scalar(0.5)
    with pytest.raises(TypeError):
        as_scalar(1j)


def test_ordering_only_for_reals():
    assert GaussianRational(1) < GaussianRational(2)
    with pytest.raises(ValueError):
        I < ONE


def test_qparameter():
    qp = QParameter(Fraction(1, 2))
    assert qp.q == Fraction(1, 4)
    assert qp.qpow(Fraction(1, 2)) == Fraction(1, 2)
    assert qp.qpow(-1) == 4
    assert qp.spow(3) == Fraction(1, 8)
    assert QParameter.parse("3/4").s == Fraction(3, 4)
    with pytest.raises(ValueError):
        qp.qpow(Fraction(1, 3))
    for bad in [0, 1, Fraction(3, 2), -Fraction(1, 2)]:
        with pytest.raises(ValueError):
            QParameter(bad)
