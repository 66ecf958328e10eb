from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from mpmath import mp, mpf

from coslab.poly import (
    CoeffSet,
    CosinePoly,
    LaurentPoly,
    as_scalar,
    evaluate,
    fraction_to_decimal,
    multiply,
    to_cosine,
    to_laurent,
    value_at_zero,
)

small_coeffs = st.lists(st.integers(-3, 3), min_size=1, max_size=12)


def test_trailing_zeros_are_stripped():
    p = CosinePoly((1, 2, 0, 0))
    assert p.coeffs == (1, 2)
    assert p.degree == 1


def test_zero_polynomial_has_degree_minus_one():
    assert CosinePoly((0, 0)).degree == -1
    assert CosinePoly(()).is_zero()


def test_from_set_builds_indicator_coefficients():
    p = CosinePoly.from_set([5, 0, 1, 1])
    assert p.coeffs == (1, 1, 0, 0, 0, 1)
    with pytest.raises(ValueError):
        CosinePoly.from_set([-1, 2])


def test_as_scalar_accepts_pairs_and_strings():
    assert as_scalar([3, 4]) == Fraction(3, 4)
    assert as_scalar("2/3") == Fraction(2, 3)
    with pytest.raises(TypeError):
        as_scalar(object())


def test_coeff_set_requires_integers():
    assert CoeffSet.of(CosinePoly((1, -2, 0))).M == 2
    with pytest.raises(ValueError):
        CoeffSet.of(CosinePoly((Fraction(1, 2),)))


def test_json_round_trip():
    p = CosinePoly((Fraction(1, 3), -2, 0, 5))
    assert CosinePoly.from_json(p.to_json()) == p


@given(small_coeffs)
def test_laurent_round_trip(cs):
    p = CosinePoly(tuple(cs))
    q = to_laurent(p)
    assert q.is_symmetric()
    assert to_cosine(q) == p


def test_to_cosine_rejects_asymmetric():
    with pytest.raises(ValueError):
        to_cosine(LaurentPoly({1: 1}))


@given(small_coeffs, small_coeffs)
def test_product_value_at_zero_is_product_of_values(a, b):
    p, q = CosinePoly(tuple(a)), CosinePoly(tuple(b))
    r = to_cosine(multiply(to_laurent(p), to_laurent(q)))
    assert value_at_zero(r) == value_at_zero(p) * value_at_zero(q)


@settings(max_examples=40, deadline=None)
@given(small_coeffs, st.floats(0, 6.3))
def test_evaluate_encloses_high_precision_value(cs, t):
    p = CosinePoly(tuple(cs))
    enc = evaluate(p, t, precision=1e-20)
    with mp.workdps(60):
        ref = sum(mpf(c) * mp.cos(n * mpf(t)) for n, c in enumerate(cs))
        assert enc.lo <= ref <= enc.hi
    assert enc.radius <= 1e-20


def test_evaluate_sign_of_exact_zero_is_undetermined():
    # 1 + cos t vanishes at pi
    pi_lo, pi_hi = Fraction(355, 113) - Fraction(1, 10**6), Fraction(355, 113)
    enc = evaluate(CosinePoly((1, 1)), (pi_lo, pi_hi), precision=1e-30)
    assert enc.sign() == 0


def test_fraction_to_decimal_rounds_outward():
    assert fraction_to_decimal(Fraction(1, 3), 3, "down") == "0.333"
    assert fraction_to_decimal(Fraction(1, 3), 3, "up") == "0.334"
    assert fraction_to_decimal(Fraction(-1, 3), 3, "down") == "-0.334"
    assert fraction_to_decimal(Fraction(5, 8)) == "0.625"
