"""Generalized continued fractions with polynomial entries, expanded to
exact truncated power series, plus the Jones-Thron even/odd contractions.

A ContinuedFraction stores a finite prefix of a conceptually infinite
fraction

    lead + a1/(b1 + a2/(b2 + a3/(b3 + ...)))

where every entry is a z-polynomial given as a dict {z-exponent:
coefficient}.  Signs are absorbed into the numerators, so a fraction
written with minus signs between its levels is stored with negated a_i and
the displayed form above is the all-plus normal form the contraction
formulas require.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .poly import BivarPoly
from .series import ZSeries

ZPoly = dict[int, object]


def _zp_add(a: ZPoly, b: ZPoly) -> ZPoly:
    out = dict(a)
    for e, c in b.items():
        acc = out.get(e, 0) + c
        if acc == 0:
            out.pop(e, None)
        else:
            out[e] = acc
    return out


def _zp_mul(a: ZPoly, b: ZPoly) -> ZPoly:
    out: ZPoly = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = e1 + e2
            acc = out.get(e, 0) + c1 * c2
            if acc == 0:
                out.pop(e, None)
            else:
                out[e] = acc
    return out


def _zp_neg(a: ZPoly) -> ZPoly:
    return {e: -c for e, c in a.items()}


_ONE: ZPoly = {0: 1}


@dataclass(frozen=True)
class ContinuedFraction:
    """Finite prefix of a generalized continued fraction in z."""

    numerators: tuple[ZPoly, ...]
    denominators: tuple[ZPoly, ...]
    lead: ZPoly = field(default_factory=dict)

    def __post_init__(self):
        if len(self.numerators) != len(self.denominators):
            raise ValueError("need as many denominators as numerators")
        if not self.numerators:
            raise ValueError("a continued fraction needs at least one level")

    @property
    def depth(self) -> int:
        return len(self.numerators)

    def truncated(self, depth: int) -> ContinuedFraction:
        if not 1 <= depth <= self.depth:
            raise ValueError(f"depth must be in 1..{self.depth}")
        return ContinuedFraction(
            self.numerators[:depth], self.denominators[:depth], self.lead
        )


def _expand_at_depth(cf: ContinuedFraction, depth: int, order: int) -> ZSeries:
    tail = ZSeries.from_terms(cf.denominators[depth - 1], order)
    for i in range(depth - 2, -1, -1):
        num = ZSeries.from_terms(cf.numerators[i + 1], order)
        tail = ZSeries.from_terms(cf.denominators[i], order) + num / tail
    head = ZSeries.from_terms(cf.lead, order) if cf.lead else ZSeries.zero(order)
    return head + ZSeries.from_terms(cf.numerators[0], order) / tail


def expand(cf: ContinuedFraction, order: int) -> ZSeries:
    """Expand the fraction to a power series valid through z^order.

    The fraction is treated as the prefix of an infinite one, so cutting it
    off must not affect the reported coefficients: the expansion is computed
    at full depth and at depth-1 and the two must agree through z^order.
    Levels past the first are expected to carry a factor z each, hence the
    depth >= order + 2 requirement.  A depth-1 fraction has no tail to cut
    and is evaluated exactly.
    """
    depth = cf.depth
    if depth == 1:
        return _expand_at_depth(cf, 1, order)
    if depth < order + 2:
        raise ValueError(f"need depth >= {order + 2} for order {order}, have {depth}")
    full = _expand_at_depth(cf, depth, order)
    probe = _expand_at_depth(cf, depth - 1, order)
    if full != probe:
        raise ArithmeticError(
            f"expansion not stable at depth {depth}: truncation reaches z^{order}"
        )
    return full


def catalan_cf(depth: int) -> ContinuedFraction:
    """The fraction 1/(1 - z/(1 - z/(1 - ...))) whose expansion counts
    Dyck paths: coefficients 1, 1, 2, 5, 14, ..."""
    if depth < 1:
        raise ValueError("depth must be positive")
    nums: list[ZPoly] = [dict(_ONE)] + [{1: -1} for _ in range(depth - 1)]
    dens: list[ZPoly] = [dict(_ONE) for _ in range(depth)]
    return ContinuedFraction(tuple(nums), tuple(dens))


def inv_cf(depth: int) -> ContinuedFraction:
    """The fraction whose expansion is sum_n inv_poly(n) z^n.

    Below the leading 1 the levels alternate -t*q^j*z and -q^(j+1)*z for
    j = 0, 1, 2, ...; setting q = t = 1 recovers catalan_cf.
    """
    if depth < 1:
        raise ValueError("depth must be positive")
    nums: list[ZPoly] = [dict(_ONE)]
    for i in range(2, depth + 1):
        j = (i - 2) // 2
        if i % 2 == 0:
            coeff = BivarPoly.term(-1, qexp=j, texp=1)
        else:
            coeff = BivarPoly.term(-1, qexp=j + 1, texp=0)
        nums.append({1: coeff})
    dens: list[ZPoly] = [dict(_ONE) for _ in range(depth)]
    return ContinuedFraction(tuple(nums), tuple(dens))


def substitute_qt(cf: ContinuedFraction, q0: int, t0: int) -> ContinuedFraction:
    """Evaluate every BivarPoly entry at integers (q0, t0)."""

    def sub(zp: ZPoly) -> ZPoly:
        out: ZPoly = {}
        for e, c in zp.items():
            val = c.eval_int(q0, t0) if isinstance(c, BivarPoly) else c
            if val != 0:
                out[e] = val
        return out

    return ContinuedFraction(
        tuple(sub(a) for a in cf.numerators),
        tuple(sub(b) for b in cf.denominators),
        sub(cf.lead),
    )


def _require_unit_form(cf: ContinuedFraction, what: str) -> None:
    if cf.lead:
        raise ValueError(f"{what} requires a fraction with no leading term")
    if any(b != _ONE for b in cf.denominators):
        raise ValueError(f"{what} requires all unit denominators")


def even_contraction(cf: ContinuedFraction) -> ContinuedFraction:
    """Jones-Thron even part: the contracted fraction

        a1/(1+a2) - a2*a3/(1+a3+a4) - a4*a5/(1+a5+a6) - ...

    whose convergents are the even ones of the input; as a power series it
    agrees with the input fraction.  Only fully determined levels of the
    output are produced, so the input should be roughly twice as deep as
    the expansion order needs.
    """
    _require_unit_form(cf, "even contraction")
    a = cf.numerators
    d = cf.depth
    nums: list[ZPoly] = []
    dens: list[ZPoly] = []
    for j in range(1, d // 2 + 1):
        if j == 1:
            nums.append(dict(a[0]))
            dens.append(_zp_add(_ONE, a[1]))
        else:
            nums.append(_zp_neg(_zp_mul(a[2 * j - 3], a[2 * j - 2])))
            dens.append(_zp_add(_ONE, _zp_add(a[2 * j - 2], a[2 * j - 1])))
    if not nums:
        raise ValueError("input too shallow to contract")
    return ContinuedFraction(tuple(nums), tuple(dens))


def odd_contraction(cf: ContinuedFraction) -> ContinuedFraction:
    """Jones-Thron odd part: the contracted fraction

        a1 - a1*a2/(1+a2+a3) - a3*a4/(1+a4+a5) - a5*a6/(1+a6+a7) - ...

    whose convergents are the odd ones of the input."""
    _require_unit_form(cf, "odd contraction")
    a = cf.numerators
    d = cf.depth
    nums: list[ZPoly] = []
    dens: list[ZPoly] = []
    for j in range(1, (d - 1) // 2 + 1):
        nums.append(_zp_neg(_zp_mul(a[2 * j - 2], a[2 * j - 1])))
        dens.append(_zp_add(_ONE, _zp_add(a[2 * j - 1], a[2 * j])))
    if not nums:
        raise ValueError("input too shallow to contract")
    return ContinuedFraction(tuple(nums), tuple(dens), lead=dict(a[0]))
