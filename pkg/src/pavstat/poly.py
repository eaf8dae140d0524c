"""Exact sparse polynomial arithmetic in q and t over Python's integers.

BivarPoly holds the two-variable statistic polynomials; UnivarPoly holds
one-variable slices and specializations of them.  Coefficients are plain
Python ints, so values never overflow.  The shape predicates (symmetry,
unimodality, log-concavity) read the coefficient sequence across the
contiguous support window of a UnivarPoly, so internal zeros count as
entries while leading and trailing zeros do not exist by construction.
"""

from __future__ import annotations


def _power_str(var: str, exp: int) -> str:
    return var if exp == 1 else f"{var}^{exp}"


def _join_terms(rendered: list[tuple[int, str]]) -> str:
    """Join (coefficient sign, magnitude string) pairs into a polynomial string."""
    out = []
    for coeff, body in rendered:
        if not out:
            out.append(body if coeff > 0 else f"-{body}")
        else:
            out.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(out)


class UnivarPoly:
    """Sparse single-variable polynomial with integer coefficients.

    The variable tag ("q" or "t") is carried along so that slices of the
    bivariate polynomials print correctly; constants are compatible with
    either variable.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: dict[int, int] | None = None, var: str = "q"):
        table: dict[int, int] = {}
        for exp, c in (coeffs or {}).items():
            if not isinstance(c, int):
                raise TypeError(f"integer coefficient required, got {type(c).__name__}")
            if not isinstance(exp, int) or exp < 0:
                raise ValueError(f"exponent must be a nonnegative integer: {exp!r}")
            if c != 0:
                table[exp] = c
        self.coeffs = table
        self.var = var

    @classmethod
    def term(cls, c: int, exp: int = 0, var: str = "q") -> UnivarPoly:
        return cls({exp: c}, var)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return set(self.coeffs) <= {0}

    def coeff(self, exp: int) -> int:
        return self.coeffs.get(exp, 0)

    def min_degree(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no support")
        return min(self.coeffs)

    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no support")
        return max(self.coeffs)

    def support_window(self) -> list[int]:
        """Coefficients from the lowest to the highest nonzero exponent.

        Empty for the zero polynomial; internal zeros are included.
        """
        if not self.coeffs:
            return []
        lo, hi = self.min_degree(), self.degree()
        return [self.coeffs.get(e, 0) for e in range(lo, hi + 1)]

    def evaluate(self, x0: int) -> int:
        return sum(c * x0**e for e, c in self.coeffs.items())

    def unit_inverse(self) -> int:
        """Inverse of this polynomial when it is the constant 1 or -1."""
        if self.is_constant() and self.coeff(0) in (1, -1):
            return self.coeff(0)
        raise ValueError(f"not a unit in the integer polynomial ring: {self}")

    def _coerce(self, other) -> UnivarPoly:
        if isinstance(other, UnivarPoly):
            if other.var != self.var and not (other.is_constant() or self.is_constant()):
                raise ValueError(f"variable mismatch: {self.var} vs {other.var}")
            return other
        if isinstance(other, int):
            return UnivarPoly({0: other}, self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        var = self.var if not self.is_constant() else other.var
        return UnivarPoly(out, var)

    __radd__ = __add__

    def __neg__(self):
        return UnivarPoly({e: -c for e, c in self.coeffs.items()}, self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        var = self.var if not self.is_constant() else other.var
        return UnivarPoly(out, var)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = UnivarPoly({0: 1}, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = UnivarPoly({0: other}, self.var)
        if not isinstance(other, UnivarPoly):
            return NotImplemented
        if self.coeffs != other.coeffs:
            return False
        return self.var == other.var or self.is_constant()

    def __str__(self):
        if not self.coeffs:
            return "0"
        rendered = []
        for exp in sorted(self.coeffs):
            c = self.coeffs[exp]
            factors = []
            if exp == 0 or abs(c) != 1:
                factors.append(str(abs(c)))
            if exp != 0:
                factors.append(_power_str(self.var, exp))
            rendered.append((c, "*".join(factors)))
        return _join_terms(rendered)

    def __repr__(self):
        return f"UnivarPoly[{self.var}]({self})"


class BivarPoly:
    """Sparse polynomial in q and t with integer coefficients.

    Terms map (q-exponent, t-exponent) pairs to nonzero coefficients.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[int, int], int] | None = None):
        table: dict[tuple[int, int], int] = {}
        for key, c in (terms or {}).items():
            if not isinstance(c, int):
                raise TypeError(f"integer coefficient required, got {type(c).__name__}")
            qe, te = key
            if qe < 0 or te < 0:
                raise ValueError(f"exponents must be nonnegative: {key!r}")
            if c != 0:
                table[(qe, te)] = c
        self.terms = table

    @classmethod
    def term(cls, c: int, qexp: int = 0, texp: int = 0) -> BivarPoly:
        return cls({(qexp, texp): c})

    @classmethod
    def zero(cls) -> BivarPoly:
        return cls()

    @classmethod
    def one(cls) -> BivarPoly:
        return cls({(0, 0): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return set(self.terms) <= {(0, 0)}

    def coeff_of(self, qexp: int, texp: int) -> int:
        return self.terms.get((qexp, texp), 0)

    def coeff_t(self, k: int) -> UnivarPoly:
        """The q-polynomial multiplying t^k."""
        return UnivarPoly({qe: c for (qe, te), c in self.terms.items() if te == k}, "q")

    def coeff_q(self, a: int) -> UnivarPoly:
        """The t-polynomial multiplying q^a."""
        return UnivarPoly({te: c for (qe, te), c in self.terms.items() if qe == a}, "t")

    def eval_int(self, q0: int, t0: int) -> int:
        return sum(c * q0**qe * t0**te for (qe, te), c in self.terms.items())

    def subst_q(self, q0: int) -> UnivarPoly:
        """Substitute an integer for q, leaving a polynomial in t."""
        out: dict[int, int] = {}
        for (qe, te), c in self.terms.items():
            out[te] = out.get(te, 0) + c * q0**qe
        return UnivarPoly(out, "t")

    def subst_t(self, t0: int) -> UnivarPoly:
        """Substitute an integer for t, leaving a polynomial in q."""
        out: dict[int, int] = {}
        for (qe, te), c in self.terms.items():
            out[qe] = out.get(qe, 0) + c * t0**te
        return UnivarPoly(out, "q")

    def t_degree(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no support")
        return max(te for _, te in self.terms)

    def q_degree(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no support")
        return max(qe for qe, _ in self.terms)

    def unit_inverse(self) -> int:
        if self.is_constant() and self.coeff_of(0, 0) in (1, -1):
            return self.coeff_of(0, 0)
        raise ValueError(f"not a unit in the integer polynomial ring: {self}")

    def _coerce(self, other) -> BivarPoly:
        if isinstance(other, BivarPoly):
            return other
        if isinstance(other, int):
            return BivarPoly({(0, 0): other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return BivarPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BivarPoly({key: -c for key, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[tuple[int, int], int] = {}
        for (q1, t1), c1 in self.terms.items():
            for (q2, t2), c2 in other.terms.items():
                key = (q1 + q2, t1 + t2)
                out[key] = out.get(key, 0) + c1 * c2
        return BivarPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = BivarPoly({(0, 0): other})
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return self.terms == other.terms

    def __str__(self):
        if not self.terms:
            return "0"
        # canonical order: ascending total degree, then ascending q-degree
        keys = sorted(self.terms, key=lambda k: (k[0] + k[1], k[0]))
        rendered = []
        for qe, te in keys:
            c = self.terms[(qe, te)]
            factors = []
            if (qe, te) == (0, 0) or abs(c) != 1:
                factors.append(str(abs(c)))
            if qe:
                factors.append(_power_str("q", qe))
            if te:
                factors.append(_power_str("t", te))
            rendered.append((c, "*".join(factors)))
        return _join_terms(rendered)

    def __repr__(self):
        return f"BivarPoly({self})"


def is_symmetric(p: UnivarPoly) -> bool:
    """True iff the support-window coefficients read the same reversed.

    The zero polynomial counts as symmetric.
    """
    w = p.support_window()
    return w == w[::-1]


def is_unimodal(p: UnivarPoly) -> bool:
    """True iff the support-window coefficients rise (weakly) then fall."""
    w = p.support_window()
    rising = True
    for a, b in zip(w, w[1:]):
        if b > a and not rising:
            return False
        if b < a:
            rising = False
    return True


def is_log_concave(p: UnivarPoly) -> bool:
    """True iff a_i^2 >= a_{i-1} * a_{i+1} across the support window."""
    w = p.support_window()
    return all(w[i] ** 2 >= w[i - 1] * w[i + 1] for i in range(1, len(w) - 1))
