import pytest

from pavstat.closed_forms import (
    binomial,
    catalan,
    narayana,
    signed_coeff_predictions,
    signed_enum_coeff,
    signed_gf,
    signed_gf_odd,
    signed_poly_formula,
    signed_series,
    verify_coefficient_predictions,
    verify_even_step_recurrence,
    verify_functional_equation,
    verify_lagrange_identity,
    verify_reflection_identity,
    verify_sign_enumeration,
    verify_signed_ode,
    verify_three_term_recurrence,
)
from pavstat.perm_core import enumerate_avoiders
from pavstat.poly import UnivarPoly
from pavstat.statpoly import signed_inv_poly


def test_binomial_convention():
    assert binomial(5, 2) == 10
    assert binomial(5, -1) == 0
    assert binomial(3, 4) == 0
    assert binomial(-1, 0) == 0


def test_catalan_values():
    assert [catalan(n) for n in range(11)] == [
        1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796,
    ]
    assert catalan(12) == 208012
    assert catalan(15) == 9694845


@pytest.mark.parametrize("n", range(9))
def test_catalan_matches_enumeration(n):
    assert catalan(n) == sum(1 for _ in enumerate_avoiders(n))


def test_catalan_convolution():
    # the quadratic functional equation, coefficientwise
    for n in range(11):
        assert catalan(n + 1) == sum(catalan(i) * catalan(n - i) for i in range(n + 1))


def test_narayana_values():
    assert narayana(4, 2) == 6
    assert all(narayana(n, 1) == 1 for n in range(1, 10))
    assert narayana(3, 4) == 0
    assert narayana(4, 0) == 0


@pytest.mark.parametrize("n", range(1, 11))
def test_narayana_row_sums(n):
    assert sum(narayana(n, k) for k in range(1, n + 1)) == catalan(n)


def test_signed_enum_coeff_values():
    assert signed_enum_coeff(2, 1) == 1
    assert signed_enum_coeff(2, 2) == 1
    assert signed_enum_coeff(5, 3) == 4
    assert all(signed_enum_coeff(n, n) == 1 for n in range(1, 13))
    assert signed_enum_coeff(3, 0) == 0
    assert signed_enum_coeff(2, 3) == 0


def test_signed_formula_small():
    assert signed_poly_formula(2) == UnivarPoly({2: 1, 1: -1}, "t")
    assert signed_poly_formula(3) == UnivarPoly({3: 1, 2: -1, 1: 1}, "t")


@pytest.mark.parametrize("n", range(1, 11))
def test_sign_enumeration_identity(n):
    assert verify_sign_enumeration(n)


@pytest.mark.parametrize("n", range(1, 6))
def test_even_step_recurrence(n):
    assert verify_even_step_recurrence(n)


def test_even_step_recurrence_base_case():
    assert signed_inv_poly(2) == UnivarPoly({1: 1, 0: -1}, "t") * signed_inv_poly(1)


@pytest.mark.parametrize("n", range(2, 6))
def test_three_term_recurrence(n):
    assert verify_three_term_recurrence(n)


def test_functional_equation():
    assert verify_functional_equation(6)
    assert verify_functional_equation(10)


def test_reflection_identity():
    assert verify_reflection_identity(8)


def test_signed_ode_enumerated_range():
    assert verify_signed_ode(5)


def test_signed_ode_with_formula_tail():
    assert verify_signed_ode(8, enumerate_up_to=7)


def test_signed_gf_matches_enumeration():
    series = signed_gf(8)
    for n in range(9):
        assert series.coeff(n) == signed_inv_poly(n)


def test_signed_gf_odd_matches_enumeration():
    series = signed_gf_odd(4)
    for n in range(5):
        assert series.coeff(n) == signed_inv_poly(2 * n + 1)


def test_odd_part_of_gf_is_odd_gf():
    assert signed_gf(11).odd_part() == signed_gf_odd(5)


def test_signed_series_sources():
    series = signed_series(6)
    assert series.coeff(0) == 1
    assert series.coeff(4) == signed_inv_poly(4)
    hybrid = signed_series(6, enumerate_up_to=3)
    assert hybrid.coeff(5) == signed_poly_formula(5)
    assert all(series.coeff(n) == hybrid.coeff(n) for n in range(7))


@pytest.mark.parametrize("n", range(9))
def test_lagrange_identity(n):
    assert verify_lagrange_identity(n)


def test_coeff_predictions_values():
    assert signed_coeff_predictions(1, 0) == (1, 0)
    assert signed_coeff_predictions(1, 1) == (1, -1)
    assert signed_coeff_predictions(3, 1) == (9, -3)


@pytest.mark.parametrize("n", range(5))
def test_coefficient_predictions_match_enumeration(n):
    assert verify_coefficient_predictions(n)


def test_preconditions():
    with pytest.raises(ValueError):
        signed_poly_formula(0)
    with pytest.raises(ValueError):
        verify_even_step_recurrence(0)
    with pytest.raises(ValueError):
        verify_three_term_recurrence(1)
    with pytest.raises(ValueError):
        catalan(-1)
