"""Closed formulas and generating-function identities for the signed and
unsigned enumeration of 321-avoiding permutations, each one checkable
against the brute-force polynomials from statpoly.

Every verifier here compares complete polynomial or series objects, never
spot values.  Division and square roots of series run over exact rationals
(TPoly coefficients) and the final coefficients are converted back to
integer polynomials with an explicit integrality check.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from . import statpoly
from .poly import UnivarPoly
from .series import TPoly, ZSeries

# Enumerating all avoiders is realistic up to about this length; the signed
# polynomial of longer permutations comes from the proven formula instead.
ENUMERATION_LIMIT = 13


def binomial(n: int, k: int) -> int:
    """Binomial coefficient with the convention 0 for k < 0 or k > n."""
    if k < 0 or k > n or n < 0:
        return 0
    return comb(n, k)


@lru_cache(maxsize=None)
def catalan(n: int) -> int:
    """Catalan number C_n, via C_n = C_{n-1} * 2(2n-1)/(n+1)."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    if n == 0:
        return 1
    value = catalan(n - 1) * 2 * (2 * n - 1)
    assert value % (n + 1) == 0
    return value // (n + 1)


def narayana(n: int, k: int) -> int:
    """Narayana number binom(n,k)*binom(n,k-1)/n, 0 outside n >= k >= 1."""
    if not n >= k >= 1:
        return 0
    value = binomial(n, k) * binomial(n, k - 1)
    assert value % n == 0
    return value // n


def signed_enum_coeff(n: int, k: int) -> int:
    """Magnitude of the t^k coefficient in the signed lrm enumerator.

    Defined for n >= k >= 1 as binom(floor((n-1)/2), floor((k-1)/2)) *
    binom(ceil((n-1)/2), ceil((k-1)/2)); 0 outside that range.  Equals the
    number of symmetric Dyck paths of semilength n with k peaks.
    """
    if not n >= k >= 1:
        return 0
    return comb((n - 1) // 2, (k - 1) // 2) * comb(n // 2, k // 2)


def signed_poly_formula(n: int) -> UnivarPoly:
    """The predicted signed polynomial sum_k (-1)^(n-k) s(n,k) t^k."""
    if n < 1:
        raise ValueError("defined for n >= 1")
    return UnivarPoly(
        {k: (-1) ** (n - k) * signed_enum_coeff(n, k) for k in range(1, n + 1)}, "t"
    )


def verify_sign_enumeration(n: int) -> bool:
    """Does the alternating-binomial formula match the brute-force signed
    polynomial for length n?"""
    return statpoly.signed_inv_poly(n) == signed_poly_formula(n)


def _signed_poly(n: int, enumerate_up_to: int) -> UnivarPoly:
    """signed_inv_poly(n) by enumeration when feasible, by formula beyond."""
    if n <= enumerate_up_to:
        return statpoly.signed_inv_poly(n)
    return signed_poly_formula(n)


def signed_series(order: int, enumerate_up_to: int = ENUMERATION_LIMIT) -> ZSeries:
    """The series sum_n signed_inv_poly(n) z^n through z^order."""
    return ZSeries([_signed_poly(n, enumerate_up_to) for n in range(order + 1)], order)


def signed_odd_series(order: int, enumerate_up_to: int = ENUMERATION_LIMIT) -> ZSeries:
    """The series whose z^n coefficient is signed_inv_poly(2n+1)."""
    return ZSeries(
        [_signed_poly(2 * n + 1, enumerate_up_to) for n in range(order + 1)], order
    )


def verify_even_step_recurrence(n: int) -> bool:
    """signed_inv_poly(2n) == (t - 1) * signed_inv_poly(2n-1), for n >= 1."""
    if n < 1:
        raise ValueError("defined for n >= 1")
    t_minus_1 = UnivarPoly({1: 1, 0: -1}, "t")
    return statpoly.signed_inv_poly(2 * n) == t_minus_1 * statpoly.signed_inv_poly(2 * n - 1)


def verify_three_term_recurrence(n: int) -> bool:
    """(n+1) I(2n+1) == 2((1+t^2)n - t) I(2n-1) - (1-t^2)^2 (n-1) I(2n-3)
    with I(m) = signed_inv_poly(m), for n >= 2."""
    if n < 2:
        raise ValueError("defined for n >= 2")
    t = UnivarPoly({1: 1}, "t")
    one_minus_t2_sq = (1 - t * t) ** 2
    lhs = (n + 1) * statpoly.signed_inv_poly(2 * n + 1)
    rhs = 2 * ((1 + t * t) * n - t) * statpoly.signed_inv_poly(2 * n - 1) - (
        one_minus_t2_sq * (n - 1) * statpoly.signed_inv_poly(2 * n - 3)
    )
    return lhs == rhs


def verify_functional_equation(order: int) -> bool:
    """With F = signed_series(order), check that

        (1+z-tz) z F^2 - (1+2z+z^2-t^2 z^2) F + (1+z+tz)

    vanishes through z^(order-1)."""
    if order < 2:
        raise ValueError("needs order >= 2")
    t = UnivarPoly({1: 1}, "t")
    f = signed_series(order)
    a = ZSeries.from_terms({0: 1, 1: 1 - t}, order + 1)
    b = ZSeries.from_terms({0: 1, 1: 2, 2: 1 - t * t}, order)
    c = ZSeries.from_terms({0: 1, 1: 1 + t}, order)
    lhs = a * (f * f).shift_up(1) - b * f + c
    return lhs.is_zero_through(order - 1)


def _as_t_poly(c) -> UnivarPoly:
    """Normalize a series coefficient to an integer polynomial in t."""
    if isinstance(c, UnivarPoly):
        return c
    if isinstance(c, TPoly):
        return c.to_univar()
    if isinstance(c, Fraction):
        if c.denominator != 1:
            raise ValueError(f"non-integral coefficient {c}")
        c = c.numerator
    return UnivarPoly({0: c}, "t")


def _to_integer_coeffs(s: ZSeries) -> ZSeries:
    return ZSeries([_as_t_poly(c) for c in s.coeffs], s.order)


def signed_gf(order: int) -> ZSeries:
    """Closed form of sum_n signed_inv_poly(n) z^n:

        (1 + 2z + (1-t^2) z^2 - sqrt(1 - 2(1+t^2) z^2 + (1-t^2)^2 z^4))
            / (2z (1 + z - tz))

    computed with exact rational series arithmetic.  The numerator must be
    divisible by z and every resulting coefficient must be an integer
    polynomial in t; both are enforced.
    """
    if order < 1:
        raise ValueError("needs order >= 1")
    t = TPoly({1: 1})
    t2 = t * t
    radicand = ZSeries.from_terms(
        {0: 1, 2: -2 * (1 + t2), 4: (1 - t2) ** 2}, order + 1
    )
    numerator = ZSeries.from_terms({0: 1, 1: 2, 2: 1 - t2}, order + 1) - radicand.sqrt()
    denominator = ZSeries.from_terms({0: 2, 1: 2 * (1 - t)}, order)
    return _to_integer_coeffs(numerator.shift_down(1) / denominator)


def signed_gf_odd(order: int) -> ZSeries:
    """Closed form of the series whose z^n coefficient is
    signed_inv_poly(2n+1):

        (1 - (1-t)^2 z - sqrt(1 - 2(1+t^2) z + (1-t^2)^2 z^2))
            / (2z (1 - (1-t)^2 z))
    """
    if order < 1:
        raise ValueError("needs order >= 1")
    t = TPoly({1: 1})
    t2 = t * t
    one_minus_t_sq = (1 - t) ** 2
    radicand = ZSeries.from_terms(
        {0: 1, 1: -2 * (1 + t2), 2: (1 - t2) ** 2}, order + 1
    )
    numerator = ZSeries.from_terms({0: 1, 1: -one_minus_t_sq}, order + 1) - radicand.sqrt()
    denominator = ZSeries.from_terms({0: 2, 1: -2 * one_minus_t_sq}, order)
    return _to_integer_coeffs(numerator.shift_down(1) / denominator)


def verify_reflection_identity(order: int) -> bool:
    """With F = signed_series(order), check that

        (1+z-tz) F(z) + (1-z+tz) F(-z) == 2

    holds through z^order."""
    if order < 1:
        raise ValueError("needs order >= 1")
    t = UnivarPoly({1: 1}, "t")
    f = signed_series(order)
    lhs = (
        ZSeries.from_terms({0: 1, 1: 1 - t}, order) * f
        + ZSeries.from_terms({0: 1, 1: t - 1}, order) * f.negate_z()
        - 2
    )
    return lhs.is_zero_through(order)


def verify_signed_ode(order: int, enumerate_up_to: int = ENUMERATION_LIMIT) -> bool:
    """With G = signed_odd_series(order), check that

        z (1 - 2(1+t^2) z + (1-t^2)^2 z^2) G' +
        (1 - 2(1-t+t^2) z + (1-t^2)^2 z^2) G - t

    vanishes through z^(order-1).  Coefficients of G at lengths beyond
    enumerate_up_to come from the sign-enumeration formula.
    """
    if order < 2:
        raise ValueError("needs order >= 2")
    t = UnivarPoly({1: 1}, "t")
    sq = (1 - t * t) ** 2
    g = signed_odd_series(order, enumerate_up_to)
    p1 = ZSeries.from_terms({1: 1, 2: -2 * (1 + t * t), 3: sq}, order - 1)
    p2 = ZSeries.from_terms({0: 1, 1: -2 * (1 - t + t * t), 2: sq}, order - 1)
    lhs = p1 * g.derivative() + p2 * g - t
    return lhs.is_zero_through(order - 1)


def verify_lagrange_identity(n: int) -> bool:
    """Check the coefficient identity

        [z^n] 1/sqrt(1 - 2(1+t) z + (1-t)^2 z^2) == [x^n] (1 + (1+t)x + t x^2)^n

    with the left side from series sqrt plus division and the right side
    from a direct polynomial power."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    t = TPoly({1: 1})
    radicand = ZSeries.from_terms({0: 1, 1: -2 * (1 + t), 2: (1 - t) ** 2}, n)
    lhs = _as_t_poly((ZSeries.one(n) / radicand.sqrt()).coeff(n))

    tq = UnivarPoly({1: 1}, "t")
    base = ZSeries.from_terms({0: 1, 1: 1 + tq, 2: tq}, n)
    rhs = _as_t_poly((base**n).coeff(n))
    return lhs == rhs


def signed_coeff_predictions(n: int, k: int) -> tuple[int, int]:
    """Predicted coefficients of signed_inv_poly(2n+1): the pair

        ([t^(2k+1)], [t^(2k)]) = (binom(n,k)^2, -binom(n,k-1)*binom(n,k)).
    """
    if n < 0 or k < 0:
        raise ValueError("indices must be nonnegative")
    return binomial(n, k) ** 2, -binomial(n, k - 1) * binomial(n, k)


def verify_coefficient_predictions(n: int) -> bool:
    """Do the binomial predictions reproduce every coefficient of the
    brute-force signed polynomial of length 2n+1?"""
    actual = statpoly.signed_inv_poly(2 * n + 1)
    for e in range(2 * n + 2):
        odd_pred, even_pred = signed_coeff_predictions(n, e // 2)
        predicted = odd_pred if e % 2 == 1 else even_pred
        if actual.coeff(e) != predicted:
            return False
    return True
