"""Tests for exact rational scalars, dense polynomials, and truncated series."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polydc.exact_algebra import (
    exp_series,
    format_rational,
    log1p_series,
    make_rational,
    parse_rational,
    poly_add,
    poly_affine,
    poly_degree,
    poly_derivative,
    poly_eval,
    poly_integral_01,
    poly_mul,
    poly_normalize,
    poly_scale,
    series_compose,
    series_mul,
    series_reciprocal,
)

rationals = st.fractions(min_value=-30, max_value=30, max_denominator=16)
small_polys = st.lists(rationals, min_size=1, max_size=7)


# --- rational wire format ---------------------------------------------------


@pytest.mark.parametrize(
    "num, den, text",
    [(3, -6, "-1/2"), (5, 1, "5"), (0, 7, "0"), (-9, -3, "3"), (22, 4, "11/2")],
)
def test_make_and_format_rational(num, den, text):
    assert format_rational(make_rational(num, den)) == text


@pytest.mark.parametrize("text, value", [("-3/2", Fraction(-3, 2)), ("5", 5), ("0", 0)])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["", "a/b", "3/2/1", "1/0", "--2", "1 2"])
def test_parse_rational_rejects_malformed(text):
    with pytest.raises(ValueError):
        parse_rational(text)


@given(rationals)
def test_rational_round_trip(q):
    assert parse_rational(format_rational(q)) == q


# --- polynomials -------------------------------------------------------------


def test_poly_normalize_strips_trailing_zeros():
    assert poly_normalize([Fraction(1), Fraction(0), Fraction(0)]) == [Fraction(1)]
    assert poly_normalize([Fraction(0), Fraction(0)]) == [Fraction(0)]
    assert poly_degree(poly_normalize([Fraction(2), Fraction(3)])) == 1


def test_poly_eval_horner():
    # 1 - 2x + 3x^2 at x = 1/2
    p = [Fraction(1), Fraction(-2), Fraction(3)]
    assert poly_eval(p, Fraction(1, 2)) == Fraction(3, 4)


@given(small_polys, small_polys, rationals)
def test_poly_add_matches_pointwise_sum(p, q, x):
    assert poly_eval(poly_add(p, q), x) == poly_eval(p, x) + poly_eval(q, x)


@given(small_polys, small_polys, rationals)
def test_poly_mul_matches_pointwise_product(p, q, x):
    assert poly_eval(poly_mul(p, q), x) == poly_eval(p, x) * poly_eval(q, x)


@given(small_polys, rationals, rationals, rationals)
@settings(deadline=None)
def test_poly_affine_matches_substitution(p, a, b, x):
    assert poly_eval(poly_affine(p, a, b), x) == poly_eval(p, a * x + b)


@given(small_polys, rationals, rationals)
def test_poly_scale_is_scalar_multiplication(p, c, x):
    assert poly_eval(poly_scale(p, c), x) == c * poly_eval(p, x)


def test_poly_derivative():
    # d/dx (x^3 - 2x) = 3x^2 - 2
    p = [Fraction(0), Fraction(-2), Fraction(0), Fraction(1)]
    assert poly_derivative(p) == [Fraction(-2), Fraction(0), Fraction(3)]
    assert poly_derivative([Fraction(7)]) == [Fraction(0)]


def test_poly_integral_01():
    # ∫_0^1 (1 + 2x + 3x^2) dx = 1 + 1 + 1 = 3
    assert poly_integral_01([Fraction(1), Fraction(2), Fraction(3)]) == 3
    # ∫_0^1 x^2 dx = 1/3
    assert poly_integral_01([Fraction(0), Fraction(0), Fraction(1)]) == Fraction(1, 3)


# --- truncated series --------------------------------------------------------


def _pad(values, order):
    coeffs = [Fraction(v) for v in values]
    return coeffs + [Fraction(0)] * (order + 1 - len(coeffs))


@given(st.lists(rationals, min_size=1, max_size=6), st.lists(rationals, min_size=1, max_size=6))
def test_series_mul_commutative(a, b):
    order = max(len(a), len(b)) - 1
    a, b = _pad(a, order), _pad(b, order)
    assert series_mul(a, b) == series_mul(b, a)


@given(
    st.lists(rationals, min_size=1, max_size=5),
    st.lists(rationals, min_size=1, max_size=5),
    st.lists(rationals, min_size=1, max_size=5),
)
@settings(deadline=None)
def test_series_mul_associative(a, b, c):
    order = max(len(a), len(b), len(c)) - 1
    a, b, c = _pad(a, order), _pad(b, order), _pad(c, order)
    assert series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c))


def test_series_mul_rejects_order_mismatch():
    with pytest.raises(ValueError):
        series_mul([Fraction(1)], [Fraction(1), Fraction(2)])


@given(st.lists(rationals, min_size=1, max_size=7))
@settings(deadline=None)
def test_series_reciprocal_is_inverse(a):
    if a[0] == 0:
        a[0] = Fraction(1)
    one = _pad([1], len(a) - 1)
    assert series_mul(a, series_reciprocal(a)) == one


def test_series_reciprocal_rejects_zero_constant_term():
    with pytest.raises(ValueError):
        series_reciprocal([Fraction(0), Fraction(1)])


def test_series_compose_inverse_pair():
    # exp(log(1+t)) = 1 + t and log(1 + (e^t - 1)) = t, exactly to order 12.
    order = 12
    expm1 = exp_series(order)
    expm1[0] = Fraction(0)
    identity = _pad([0, 1], order)
    assert series_compose(exp_series(order), log1p_series(order)) == _pad([1, 1], order)
    assert series_compose(log1p_series(order), expm1) == identity


def test_series_compose_requires_zero_inner_constant():
    with pytest.raises(ValueError):
        series_compose([Fraction(1), Fraction(1)], [Fraction(1), Fraction(1)])


def test_series_compose_rejects_order_mismatch():
    with pytest.raises(ValueError):
        series_compose([Fraction(1)], [Fraction(0), Fraction(1)])


def test_exp_and_log_series_values():
    assert exp_series(3) == [Fraction(1), Fraction(1), Fraction(1, 2), Fraction(1, 6)]
    assert log1p_series(3) == [Fraction(0), Fraction(1), Fraction(-1, 2), Fraction(1, 3)]
    with pytest.raises(ValueError):
        exp_series(-1)
    with pytest.raises(ValueError):
        log1p_series(-1)
