from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hermitia import (
    GaussianRational,
    UNIT_I,
    UNIT_MINUS_I,
    UNIT_MINUS_ONE,
    UNIT_ONE,
    UNITS,
    unit_conj,
    unit_from_token,
    unit_mul,
    unit_token,
    unit_value,
)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)
gaussians = st.builds(GaussianRational, rationals, rationals)
nonzero_gaussians = gaussians.filter(lambda z: not z.is_zero())


def gr(re, im=0):
    return GaussianRational.of(re, im)


def test_basic_products():
    one_plus_i = gr(1, 1)
    assert one_plus_i * one_plus_i.conj() == gr(2)
    assert gr(0, 1) * gr(0, 1) == gr(-1)


def test_division_identity():
    z = gr(Fraction(1, 2), 1)
    assert z / z == gr(1)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        gr(1) / gr(0)


def test_conj_and_norm():
    assert gr(0, 1).conj() == gr(0, -1)
    assert gr(1, 1).norm_sq() == Fraction(2)


def test_sign_of_real():
    assert gr(Fraction(-3, 7)).sign_of_real() == -1
    assert gr(0).sign_of_real() == 0
    assert gr(5).sign_of_real() == 1
    with pytest.raises(ValueError):
        gr(1, 1).sign_of_real()


def test_rendering():
    assert str(gr(Fraction(-3, 7))) == "-3/7"
    assert str(gr(Fraction(1, 2), Fraction(3, 4))) == "(1/2)+(3/4)i"


@given(gaussians, gaussians, gaussians)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a


@given(nonzero_gaussians)
def test_multiplicative_inverse(a):
    assert (gr(1) / a) * a == gr(1)


@given(gaussians, gaussians)
def test_norm_multiplicative(a, b):
    assert (a * b).norm_sq() == a.norm_sq() * b.norm_sq()


@given(gaussians, gaussians)
def test_conjugation_laws(a, b):
    assert a.conj().conj() == a
    assert (a * b).conj() == a.conj() * b.conj()


def test_unit_arithmetic():
    assert unit_mul(UNIT_I, UNIT_I) == UNIT_MINUS_ONE
    assert unit_conj(UNIT_I) == UNIT_MINUS_I
    assert unit_conj(UNIT_MINUS_ONE) == UNIT_MINUS_ONE
    for u in UNITS:
        assert unit_from_token(unit_token(u)) == u
        assert unit_value(u).norm_sq() == 1
    with pytest.raises(ValueError):
        unit_from_token("2i")


def test_unit_values_match_codes():
    assert unit_value(UNIT_ONE) == gr(1)
    assert unit_value(UNIT_I) == gr(0, 1)
    assert unit_value(UNIT_MINUS_ONE) == gr(-1)
    assert unit_value(UNIT_MINUS_I) == gr(0, -1)
