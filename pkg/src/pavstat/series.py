"""Truncated formal power series in z with exact coefficient arithmetic.

A ZSeries of order N stores the coefficients of z^0 .. z^N and never claims
validity beyond that; binary operations truncate to the smaller order.  The
coefficients may be plain ints or Fractions, TPoly values (polynomials in t
over the rationals), or the integer polynomials from the poly module, since
all of these promote scalars in their ring operations.

Square roots and division force rational arithmetic along the way, which is
why TPoly exists; results that ought to be integral are converted back with
an explicit integrality check at extraction time.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import UnivarPoly

Scalar = (int, Fraction)


class TPoly:
    """Polynomial in t with exact Fraction coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[int, Fraction | int] | None = None):
        table: dict[int, Fraction] = {}
        for exp, c in (coeffs or {}).items():
            if exp < 0:
                raise ValueError(f"exponent must be nonnegative: {exp!r}")
            c = Fraction(c)
            if c:
                table[exp] = c
        self.coeffs = table

    @classmethod
    def const(cls, c) -> TPoly:
        return cls({0: Fraction(c)})

    @classmethod
    def from_univar(cls, p: UnivarPoly) -> TPoly:
        return cls(dict(p.coeffs))

    def to_univar(self, var: str = "t") -> UnivarPoly:
        """Convert to an integer polynomial; raises if a coefficient is fractional."""
        out = {}
        for e, c in self.coeffs.items():
            if c.denominator != 1:
                raise ValueError(f"non-integral coefficient {c} at t^{e}")
            out[e] = c.numerator
        return UnivarPoly(out, var)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return set(self.coeffs) <= {0}

    def coeff(self, exp: int) -> Fraction:
        return self.coeffs.get(exp, Fraction(0))

    def unit_inverse(self) -> Fraction:
        if not self.is_constant() or not self.coeffs:
            raise ValueError(f"not a unit: {self}")
        return 1 / self.coeffs[0]

    def _coerce(self, other) -> TPoly:
        if isinstance(other, TPoly):
            return other
        if isinstance(other, Scalar):
            return TPoly({0: other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return TPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return TPoly({e: -c for e, c in self.coeffs.items()})

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
        out: dict[int, Fraction] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return TPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = TPoly({0: 1})
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = [f"{c}*t^{e}" if e else str(c) for e, c in sorted(self.coeffs.items())]
        return " + ".join(parts)

    def __repr__(self):
        return f"TPoly({self})"


def _unit_inverse(c):
    """Exact inverse of a coefficient that must be a unit."""
    if isinstance(c, int):
        if c == 0:
            raise ZeroDivisionError("series has zero constant term")
        return c if c in (1, -1) else Fraction(1, c)
    if isinstance(c, Fraction):
        if not c:
            raise ZeroDivisionError("series has zero constant term")
        return 1 / c
    return c.unit_inverse()


class ZSeries:
    """Power series in z, truncated after z^order, with exact coefficients."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order: int | None = None):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        if len(coeffs) < order + 1:
            coeffs.extend([0] * (order + 1 - len(coeffs)))
        self.coeffs = coeffs[: order + 1]
        self.order = order

    @classmethod
    def zero(cls, order: int) -> ZSeries:
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> ZSeries:
        return cls([1], order)

    @classmethod
    def from_terms(cls, terms: dict[int, object], order: int) -> ZSeries:
        """Embed a z-polynomial {exponent: coefficient}, truncating above order."""
        coeffs = [0] * (order + 1)
        for e, c in terms.items():
            if e < 0:
                raise ValueError(f"exponent must be nonnegative: {e!r}")
            if e <= order:
                coeffs[e] = coeffs[e] + c
        return cls(coeffs, order)

    def coeff(self, n: int):
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} outside valid range 0..{self.order}")
        return self.coeffs[n]

    def coefficients(self) -> list:
        return list(self.coeffs)

    def is_zero_through(self, order: int) -> bool:
        if order > self.order:
            raise IndexError(f"order {order} exceeds valid range 0..{self.order}")
        return all(self.coeffs[i] == 0 for i in range(order + 1))

    def truncate(self, order: int) -> ZSeries:
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return ZSeries(self.coeffs[: order + 1], order)

    def _coerce(self, other) -> ZSeries:
        if isinstance(other, ZSeries):
            return other
        if isinstance(other, Scalar) or hasattr(other, "unit_inverse"):
            # scalars and polynomial ring elements embed as constant series
            return ZSeries.from_terms({0: other}, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        order = min(self.order, other.order)
        return ZSeries([self.coeffs[i] + other.coeffs[i] for i in range(order + 1)], order)

    __radd__ = __add__

    def __neg__(self):
        return ZSeries([-c for c in self.coeffs], self.order)

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
        if not isinstance(other, ZSeries):
            # scalar or coefficient-ring element: multiply coefficientwise
            return ZSeries([c * other for c in self.coeffs], self.order)
        order = min(self.order, other.order)
        out = []
        for k in range(order + 1):
            acc = 0
            for i in range(k + 1):
                acc = acc + self.coeffs[i] * other.coeffs[k - i]
            out.append(acc)
        return ZSeries(out, order)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = ZSeries.one(self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        order = min(self.order, other.order)
        inv0 = _unit_inverse(other.coeffs[0])
        out: list = []
        for k in range(order + 1):
            acc = self.coeffs[k]
            for i in range(k):
                acc = acc - out[i] * other.coeffs[k - i]
            out.append(acc * inv0)
        return ZSeries(out, order)

    def sqrt(self) -> ZSeries:
        """The square root with constant term 1, by coefficient recursion."""
        if self.coeffs[0] != 1:
            raise ValueError("sqrt requires constant term 1")
        half = Fraction(1, 2)
        out: list = [1]
        for k in range(1, self.order + 1):
            acc = self.coeffs[k]
            for i in range(1, k):
                acc = acc - out[i] * out[k - i]
            out.append(acc * half)
        return ZSeries(out, self.order)

    def derivative(self) -> ZSeries:
        """Formal derivative with respect to z; drops one order of validity."""
        if self.order == 0:
            raise ValueError("cannot differentiate an order-0 series")
        return ZSeries([self.coeffs[i] * i for i in range(1, self.order + 1)], self.order - 1)

    def negate_z(self) -> ZSeries:
        """Substitute z -> -z."""
        return ZSeries(
            [c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)], self.order
        )

    def shift_up(self, k: int = 1) -> ZSeries:
        """Multiply by z^k; the known part of the series gets k orders longer."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        return ZSeries([0] * k + self.coeffs, self.order + k)

    def shift_down(self, k: int = 1) -> ZSeries:
        """Divide by z^k; raises unless the first k coefficients vanish."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        if k > self.order:
            raise ValueError("shift exceeds series order")
        for i in range(k):
            if self.coeffs[i] != 0:
                raise ValueError(f"coefficient of z^{i} is nonzero; cannot divide by z^{k}")
        return ZSeries(self.coeffs[k:], self.order - k)

    def even_part(self) -> ZSeries:
        """Series of coefficients at even powers: sum c_{2n} z^n."""
        return ZSeries(self.coeffs[0::2], self.order // 2)

    def odd_part(self) -> ZSeries:
        """Series of coefficients at odd powers: sum c_{2n+1} z^n.

        This realizes (f(sqrt(z)) - f(-sqrt(z))) / (2 sqrt(z)) without ever
        forming fractional powers.
        """
        if self.order == 0:
            raise ValueError("need order >= 1 to extract an odd part")
        return ZSeries(self.coeffs[1::2], (self.order - 1) // 2)

    def __eq__(self, other):
        if not isinstance(other, ZSeries):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __str__(self):
        parts = [f"({c})*z^{i}" if i else f"({c})" for i, c in enumerate(self.coeffs) if c != 0]
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O(z^{self.order + 1})"

    def __repr__(self):
        return f"ZSeries({self})"
