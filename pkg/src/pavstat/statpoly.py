"""Statistic polynomials over 321-avoiding permutations, by brute force.

maj_poly(n) sums q^maj * t^des and inv_poly(n) sums q^inv * t^lrm over every
321-avoiding permutation of [n].  Both are computed by a single backtracking
walk that carries the four statistics incrementally; no closed form or
recurrence enters here, so these polynomials serve as the ground truth that
the formula modules are checked against.
"""

from __future__ import annotations

from bisect import bisect_right
from functools import lru_cache

from .poly import BivarPoly, UnivarPoly

StatCounts = dict[tuple[int, int], int]


@lru_cache(maxsize=32)
def _stat_counts(n: int) -> tuple[StatCounts, StatCounts]:
    """Histogram (maj, des) -> count and (inv, lrm) -> count over the avoiders.

    Same lexicographic backtracking as perm_core.enumerate_avoiders, with the
    statistics updated in O(1) per placed value: placing v at position pos
    adds a descent (and pos-1 to maj) iff the previous value exceeds v, adds
    one left-to-right maximum iff v exceeds the prefix maximum, and adds one
    inversion for every already-placed value above v.
    """
    if n < 0:
        raise ValueError("length must be nonnegative")
    if n == 0:
        return {(0, 0): 1}, {(0, 0): 1}

    maj_des: StatCounts = {}
    inv_lrm: StatCounts = {}
    unused = list(range(1, n + 1))

    def walk(pos, prev, prefix_max, blocked_below, d, m, iv, lr):
        if not unused:
            key = (m, d)
            maj_des[key] = maj_des.get(key, 0) + 1
            key = (iv, lr)
            inv_lrm[key] = inv_lrm.get(key, 0) + 1
            return
        if unused[0] <= blocked_below:
            return
        rem = len(unused)
        for i in range(bisect_right(unused, blocked_below), rem):
            v = unused.pop(i)
            descent = prev > v
            new_inv = iv + (n - v) - (rem - 1 - i)
            if v > prefix_max:
                walk(pos + 1, v, v, blocked_below,
                     d + descent, m + (pos - 1) * descent, new_inv, lr + 1)
            else:
                walk(pos + 1, v, prefix_max, v,
                     d + descent, m + (pos - 1) * descent, new_inv, lr)
            unused.insert(i, v)

    walk(1, 0, 0, 0, 0, 0, 0, 0)
    return maj_des, inv_lrm


def maj_poly(n: int) -> BivarPoly:
    """Sum of q^maj(w) * t^des(w) over the 321-avoiders of [n]."""
    maj_des, _ = _stat_counts(n)
    return BivarPoly({key: c for key, c in maj_des.items()})


def inv_poly(n: int) -> BivarPoly:
    """Sum of q^inv(w) * t^lrm(w) over the 321-avoiders of [n]."""
    _, inv_lrm = _stat_counts(n)
    return BivarPoly({key: c for key, c in inv_lrm.items()})


def maj_slice(n: int, k: int) -> UnivarPoly:
    """The maj generating polynomial over avoiders with exactly k descents.

    This is the coefficient of t^k in maj_poly(n), as a polynomial in q; the
    k = 0 slice is the constant 1 (only the identity has no descents).
    """
    if k < 0:
        raise ValueError("descent count must be nonnegative")
    return maj_poly(n).coeff_t(k)


def signed_inv_poly(n: int) -> UnivarPoly:
    """inv_poly(n) with q = -1: the inversion-signed lrm enumerator in t."""
    return inv_poly(n).subst_q(-1)
