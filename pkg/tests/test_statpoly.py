import pytest

from pavstat.closed_forms import catalan, narayana
from pavstat.perm_core import des, enumerate_avoiders, inv, lrm, maj
from pavstat.poly import BivarPoly, UnivarPoly, is_symmetric
from pavstat.statpoly import inv_poly, maj_poly, maj_slice, signed_inv_poly


def direct_maj_poly(n):
    total = BivarPoly.zero()
    for w in enumerate_avoiders(n):
        total = total + BivarPoly.term(1, maj(w), des(w))
    return total


def direct_inv_poly(n):
    total = BivarPoly.zero()
    for w in enumerate_avoiders(n):
        total = total + BivarPoly.term(1, inv(w), lrm(w))
    return total


@pytest.mark.parametrize("n", range(8))
def test_incremental_walk_matches_direct_summation(n):
    assert maj_poly(n) == direct_maj_poly(n)
    assert inv_poly(n) == direct_inv_poly(n)


def test_small_values():
    assert maj_poly(0) == BivarPoly.one()
    assert maj_poly(2) == BivarPoly({(0, 0): 1, (1, 1): 1})
    assert inv_poly(1) == BivarPoly.term(1, 0, 1)
    assert inv_poly(2) == BivarPoly({(0, 2): 1, (1, 1): 1})
    assert inv_poly(3) == BivarPoly(
        {(0, 3): 1, (1, 2): 2, (2, 2): 1, (2, 1): 1}
    )


@pytest.mark.parametrize("n", range(11))
def test_total_count_is_catalan(n):
    assert maj_poly(n).eval_int(1, 1) == catalan(n)
    assert inv_poly(n).eval_int(1, 1) == catalan(n)


@pytest.mark.parametrize("n", range(1, 11))
def test_lrm_distribution_is_narayana(n):
    expected = UnivarPoly({k: narayana(n, k) for k in range(1, n + 1)}, "t")
    assert inv_poly(n).subst_q(1) == expected


def test_narayana_cross_check_at_four():
    assert inv_poly(4).subst_q(1) == UnivarPoly({1: 1, 2: 6, 3: 6, 4: 1}, "t")


def test_maj_slice_values():
    assert maj_slice(3, 0) == 1
    assert maj_slice(3, 1) == UnivarPoly({1: 2, 2: 2}, "q")
    assert maj_slice(6, 2) == UnivarPoly({4: 9, 5: 14, 6: 23, 7: 14, 8: 9}, "q")
    assert maj_slice(4, 9).is_zero()


@pytest.mark.parametrize("n", range(1, 9))
def test_maj_slice_support_bounds(n):
    for k in range(n):
        p = maj_slice(n, k)
        if p.is_zero():
            continue
        assert p.min_degree() >= k * k
        assert p.degree() <= n * k - k * k


@pytest.mark.parametrize("n", range(1, 9))
def test_constant_descent_slice_is_one(n):
    assert maj_slice(n, 0) == 1


@pytest.mark.parametrize("n", range(1, 9))
def test_slices_are_symmetric(n):
    for k in range(n):
        assert is_symmetric(maj_slice(n, k))


def test_signed_values():
    assert signed_inv_poly(1) == UnivarPoly({1: 1}, "t")
    assert signed_inv_poly(2) == UnivarPoly({2: 1, 1: -1}, "t")
    assert signed_inv_poly(3) == UnivarPoly({3: 1, 2: -1, 1: 1}, "t")


def test_signed_totals():
    assert signed_inv_poly(2).evaluate(1) == 0
    assert signed_inv_poly(3).evaluate(1) == 1
    assert inv_poly(3).eval_int(-1, 1) == 1
