"""Tests for Dedekind-type DC sums and the reciprocity-law machinery."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polydc.dc_sums import (
    alternating_bar_eval,
    corollary15_rhs,
    dc_sum,
    poly_dc_sum,
    reciprocity_sides,
    s_pk_of_1_m,
    theorem11_sides,
    theorem12_sides,
    theorem13_sides,
)
from polydc.sequences import bar_eval, euler_poly

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=24)


# --- alternating bar evaluation ----------------------------------------------


def test_alternating_bar_eval_values():
    e1 = euler_poly(1)
    # On [0, 1) it is the polynomial itself.
    assert alternating_bar_eval(e1, Fraction(1, 3)) == Fraction(-1, 6)
    # On [1, 2) the sign flips: -E_1(1/3) = 1/6.
    assert alternating_bar_eval(e1, Fraction(4, 3)) == Fraction(1, 6)
    # Two unit steps restore the sign.
    assert alternating_bar_eval(e1, Fraction(7, 3)) == Fraction(-1, 6)
    # Negative arguments: floor(-1/4) = -1, so the sign flips once.
    assert alternating_bar_eval(e1, Fraction(-1, 4)) == Fraction(-1, 4)


@given(rationals)
@settings(deadline=None)
def test_alternating_bar_eval_antiperiodic(x):
    p = euler_poly(4)
    assert alternating_bar_eval(p, x + 1) == -alternating_bar_eval(p, x)
    assert alternating_bar_eval(p, x + 2) == alternating_bar_eval(p, x)


@given(st.fractions(min_value=0, max_value=1, max_denominator=24).filter(lambda q: q < 1))
def test_alternating_bar_matches_bar_on_unit_interval(x):
    p = euler_poly(3)
    assert alternating_bar_eval(p, x) == bar_eval(p, x)


# --- the DC sums themselves ----------------------------------------------------


def test_dc_sum_pinned_values():
    assert dc_sum(1, 1, 3) == Fraction(1, 3)
    # Hand evaluation of T_1(3, 5) with the alternating extension:
    # 2·[-(1/5)(1/10) + (2/5)(3/10) - (3/5)(-3/10) + (4/5)(-1/10)] = 2/5.
    assert dc_sum(1, 3, 5) == Fraction(2, 5)


@pytest.mark.parametrize("p", [1, 2, 5])
@pytest.mark.parametrize("h", [1, 4, 9])
def test_dc_sum_trivial_modulus(p, h):
    assert dc_sum(p, h, 1) == 0


def test_dc_sum_rejects_bad_parameters():
    for bad in [(0, 1, 3), (1, 0, 3), (1, 1, 0), (-2, 3, 5)]:
        with pytest.raises(ValueError):
            dc_sum(*bad)
    with pytest.raises(ValueError):
        poly_dc_sum(2, 0, 1, 3)


def test_poly_dc_sum_pinned_value():
    # T_1^(2)(1, 3) = 2·(-(1/3)·E_1^(2)(1/3) + (2/3)·E_1^(2)(2/3)) with
    # E_1^(2)(x) = x - 3/4, i.e. 2·(-(1/3)(-5/12) + (2/3)(-1/12)) = 1/6.
    assert poly_dc_sum(2, 1, 1, 3) == Fraction(1, 6)


@pytest.mark.parametrize("p, h, m", [(1, 1, 3), (2, 3, 5), (4, 2, 6), (3, 5, 9)])
def test_poly_dc_sum_collapses_at_index_one(p, h, m):
    assert poly_dc_sum(1, p, h, m) == dc_sum(p, h, m)


# --- auxiliary closed forms -----------------------------------------------------


@pytest.mark.parametrize("k", [-2, 0, 1, 3])
def test_s_pk_closed_form_holds(k):
    for p, m in [(1, 1), (3, 5), (6, 7), (4, 3)]:
        sides = s_pk_of_1_m(k, p, m)
        assert sides.holds and sides.lhs == sides.rhs


def test_s_pk_rejects_even_modulus():
    with pytest.raises(ValueError):
        s_pk_of_1_m(1, 3, 4)


@pytest.mark.parametrize("k", [-2, 1, 2])
@pytest.mark.parametrize("p, m", [(3, 1), (5, 5), (9, 7), (7, 9)])
def test_odd_degree_expansions_hold(k, p, m):
    assert theorem11_sides(k, p, m).holds
    assert theorem12_sides(k, p, m).holds


@pytest.mark.parametrize("bad_p", [1, 2, 4])
def test_odd_degree_expansions_reject_bad_degree(bad_p):
    with pytest.raises(ValueError):
        theorem11_sides(1, bad_p, 3)
    with pytest.raises(ValueError):
        theorem12_sides(1, bad_p, 3)


def test_odd_degree_expansions_reject_even_modulus():
    with pytest.raises(ValueError):
        theorem11_sides(1, 3, 2)
    with pytest.raises(ValueError):
        theorem12_sides(1, 3, 2)


# --- coprime-modulus expansion ---------------------------------------------------


def test_coprime_expansion_reference_point():
    sides = theorem13_sides(1, 4, 3, 5)
    assert sides.holds
    assert sides.rhs == 1695


@pytest.mark.parametrize(
    "k, p, h, m", [(1, 1, 1, 1), (-2, 5, 4, 9), (2, 3, 8, 3), (0, 6, 5, 7), (3, 2, 2, 5)]
)
def test_coprime_expansion_holds(k, p, h, m):
    sides = theorem13_sides(k, p, h, m)
    assert sides.holds and sides.lhs == sides.rhs


def test_coprime_expansion_rejects_bad_parameters():
    with pytest.raises(ValueError):
        theorem13_sides(1, 3, 3, 9)  # gcd(3, 9) = 3
    with pytest.raises(ValueError):
        theorem13_sides(1, 3, 5, 4)  # even modulus
    with pytest.raises(ValueError):
        theorem13_sides(1, 0, 1, 3)


# --- reciprocity ---------------------------------------------------------------


def test_reciprocity_reference_points():
    sides = reciprocity_sides(1, 3, 1, 3)
    assert sides.holds and sides.lhs == Fraction(-13, 2)
    assert reciprocity_sides(-2, 5, 3, 5).holds
    assert reciprocity_sides(3, 4, 7, 9).holds


def test_reciprocity_holds_without_coprimality():
    assert reciprocity_sides(2, 3, 3, 9).holds
    assert reciprocity_sides(-1, 2, 5, 5).holds


def test_reciprocity_lhs_and_rhs_are_swap_symmetric():
    for k, p, h, m in [(1, 2, 3, 5), (-2, 4, 1, 9), (2, 5, 7, 3)]:
        a = reciprocity_sides(k, p, h, m)
        b = reciprocity_sides(k, p, m, h)
        assert a.lhs == b.lhs and a.rhs == b.rhs


def test_reciprocity_rejects_even_parameters():
    with pytest.raises(ValueError):
        reciprocity_sides(1, 3, 2, 3)
    with pytest.raises(ValueError):
        reciprocity_sides(1, 3, 3, 4)


def test_classical_reciprocity_matches_single_sum_form():
    for p, h, m in [(1, 1, 3), (2, 3, 5), (5, 7, 9), (3, 5, 5)]:
        lhs = Fraction(m) ** p * dc_sum(p, h, m) + Fraction(h) ** p * dc_sum(p, m, h)
        assert lhs == corollary15_rhs(p, h, m)


def test_classical_reciprocity_agrees_with_index_one_general_form():
    for p, h, m in [(1, 1, 3), (2, 3, 5), (4, 5, 3)]:
        general = reciprocity_sides(1, p, h, m)
        lhs = Fraction(m) ** p * dc_sum(p, h, m) + Fraction(h) ** p * dc_sum(p, m, h)
        assert general.lhs == lhs == corollary15_rhs(p, h, m)


def test_corollary15_rhs_rejects_even_parameters():
    with pytest.raises(ValueError):
        corollary15_rhs(2, 2, 3)
    with pytest.raises(ValueError):
        corollary15_rhs(2, 3, 6)
