from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from pavstat.poly import UnivarPoly
from pavstat.series import TPoly, ZSeries

fractions = st.fractions(
    min_value=-4, max_value=4, max_denominator=6
)

t_polys = st.dictionaries(st.integers(0, 3), fractions, max_size=3).map(TPoly)


def zseries(order):
    return st.lists(t_polys, min_size=order + 1, max_size=order + 1).map(
        lambda cs: ZSeries(cs, order)
    )


def series_with_unit_constant(order):
    return st.lists(t_polys, min_size=order, max_size=order).map(
        lambda cs: ZSeries([1] + cs, order)
    )


def series_with_nonzero_constant(order):
    return st.tuples(
        st.integers(1, 5), st.lists(t_polys, min_size=order, max_size=order)
    ).map(lambda pair: ZSeries([Fraction(pair[0])] + pair[1], order))


def test_tpoly_arithmetic_and_conversion():
    t = TPoly({1: 1})
    p = (1 - t) ** 2
    assert p == TPoly({0: 1, 1: -2, 2: 1})
    assert p.to_univar() == UnivarPoly({0: 1, 1: -2, 2: 1}, "t")
    assert TPoly.from_univar(UnivarPoly({2: 5}, "t")) == TPoly({2: 5})
    half = TPoly({0: Fraction(1, 2)})
    with pytest.raises(ValueError):
        half.to_univar()


def test_tpoly_unit_inverse():
    assert TPoly({0: Fraction(2)}).unit_inverse() == Fraction(1, 2)
    with pytest.raises(ValueError):
        TPoly({1: 1}).unit_inverse()


def test_product_and_geometric_series():
    one = ZSeries.one(5)
    a = ZSeries.from_terms({0: 1, 1: 1}, 5)
    b = ZSeries.from_terms({0: 1, 1: -1}, 5)
    assert (a * b).coefficients() == [1, 0, -1, 0, 0, 0]
    geom = one / b
    assert geom.coefficients() == [1, 1, 1, 1, 1, 1]


def test_division_requires_unit_constant():
    z = ZSeries.from_terms({1: 1}, 4)
    with pytest.raises(ZeroDivisionError):
        ZSeries.one(4) / z


def test_sqrt_examples():
    assert ZSeries.one(4).sqrt() == ZSeries.one(4)
    s = ZSeries.from_terms({0: 1, 1: -2, 2: 1}, 5).sqrt()
    assert s.coefficients() == [1, -1, 0, 0, 0, 0]
    with pytest.raises(ValueError):
        ZSeries.from_terms({0: 2}, 3).sqrt()


@given(series_with_unit_constant(6))
def test_sqrt_squares_back(a):
    s = a.sqrt()
    assert s * s == a


@given(series_with_unit_constant(6))
def test_sqrt_of_square_roundtrip(a):
    assert (a * a).sqrt() == a


@given(zseries(5), zseries(5))
def test_product_rule(a, b):
    lhs = (a * b).derivative()
    rhs = a.derivative() * b.truncate(4) + a.truncate(4) * b.derivative()
    assert lhs == rhs


@given(zseries(6), series_with_nonzero_constant(6))
def test_division_roundtrip(a, b):
    assert (a / b) * b == a


def test_shift_up_down():
    s = ZSeries.from_terms({0: 2, 1: 3}, 3)
    up = s.shift_up(2)
    assert up.order == 5
    assert up.coefficients() == [0, 0, 2, 3, 0, 0]
    assert up.shift_down(2) == s
    with pytest.raises(ValueError):
        ZSeries.from_terms({0: 1}, 2).shift_down(1)


def test_odd_and_even_parts():
    s = ZSeries.from_terms({1: 1, 3: 1}, 4)
    assert s.odd_part().coefficients() == [1, 1]
    assert s.even_part().coefficients() == [0, 0, 0]


def test_odd_even_reconstruction():
    s = ZSeries(list(range(1, 9)), 7)
    even = s.even_part()
    odd = s.odd_part()
    rebuilt = [0] * 8
    for i, c in enumerate(even.coefficients()):
        rebuilt[2 * i] = c
    for i, c in enumerate(odd.coefficients()):
        rebuilt[2 * i + 1] = c
    assert rebuilt == s.coefficients()


def test_negate_z():
    s = ZSeries([1, 2, 3, 4], 3)
    assert s.negate_z().coefficients() == [1, -2, 3, -4]


def test_derivative():
    s = ZSeries([5, 1, 2, 7], 3)
    assert s.derivative().coefficients() == [1, 4, 21]


def test_operations_truncate_to_smaller_order():
    a = ZSeries.one(8)
    b = ZSeries.one(3)
    assert (a + b).order == 3
    assert (a * b).order == 3


def test_polynomial_coefficients_embed_as_constants():
    t = UnivarPoly({1: 1}, "t")
    s = ZSeries.from_terms({0: 1, 1: t}, 3)
    shifted = s - t
    assert shifted.coeff(0) == 1 - t
    assert (t * s).coeff(1) == t * t


def test_coeff_out_of_range():
    with pytest.raises(IndexError):
        ZSeries.one(2).coeff(3)
