"""Exact scalars: rationals, binomials and quadratic extensions R[y]/(y^2 - d).

Rationals are :class:`fractions.Fraction`, which is always kept reduced with a
positive denominator.  :class:`QuadExt` adjoins a square root ``y`` of ``d`` to
any base ring that supports ``+``, ``-`` and ``*`` with :class:`Fraction`
(rationals themselves, or :class:`lucas_euler.polyring.Poly`).
"""
from __future__ import annotations

from fractions import Fraction
from math import comb
from numbers import Rational as _RationalABC

Rational = Fraction

__all__ = [
    "Rational",
    "binomial",
    "QuadExt",
    "DiscriminantMismatch",
    "NotInvertible",
    "quadext_mul",
    "quadext_pow",
    "quadext_inv",
    "sqrt_power",
]


class DiscriminantMismatch(ValueError):
    """Raised when two extension elements with different ``d`` are combined."""


class NotInvertible(ArithmeticError):
    """Raised when an element has no inverse in its ring."""


def binomial(n: int, k: int) -> int:
    """C(n, k) with the convention C(n, k) = 0 for k < 0 or k > n."""
    if n < 0:
        raise ValueError(f"binomial: negative n={n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def _is_poly(value) -> bool:
    # Poly lives in polyring, which imports this module.
    return type(value).__name__ == "Poly"


def _scalar(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, _RationalABC):
        return Fraction(value)
    if _is_poly(value):
        return value
    raise TypeError(f"unsupported base-ring element {value!r}")


def _is_zero(value) -> bool:
    return value == 0


class QuadExt:
    """The element ``a + b*y`` of R[y]/(y^2 - d).

    Instances are immutable.  Binary operations accept plain base-ring
    elements (int, Fraction, Poly), which are lifted as ``value + 0*y``.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b=0, d=None):
        if d is None:
            raise TypeError("QuadExt needs the discriminant d")
        a, b, d = _scalar(a), _scalar(b), _scalar(d)
        if _is_poly(a) or _is_poly(b) or _is_poly(d):
            from .polyring import Poly

            a, b, d = Poly.lift(a), Poly.lift(b), Poly.lift(d)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("QuadExt is immutable")

    # -- construction helpers ------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise DiscriminantMismatch(f"d={self.d} vs d={other.d}")
            return other
        if isinstance(other, _RationalABC) or _is_poly(other):
            return QuadExt(other, 0, self.d)
        return None

    def one(self) -> QuadExt:
        return QuadExt(1, 0, self.d)

    def zero(self) -> QuadExt:
        return QuadExt(0, 0, self.d)

    # -- ring operations -----------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise DiscriminantMismatch(f"d={self.d} vs d={other.d}")
            a1, b1, a2, b2 = self.a, self.b, other.a, other.b
            return QuadExt(a1 * a2 + b1 * b2 * self.d, a1 * b2 + a2 * b1, self.d)
        if isinstance(other, _RationalABC) or _is_poly(other):
            return QuadExt(self.a * other, self.b * other, self.d)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = self.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, QuadExt):
            return self * other.inverse()
        if isinstance(other, _RationalABC):
            return QuadExt(self.a / Fraction(other), self.b / Fraction(other), self.d)
        if _is_poly(other):
            return self * QuadExt(other, 0, self.d).inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    # -- structure -----------------------------------------------------------
    def conj(self) -> QuadExt:
        return QuadExt(self.a, -self.b, self.d)

    def norm(self):
        """``a^2 - b^2 d``, an element of the base ring."""
        return self.a * self.a - self.b * self.b * self.d

    def inverse(self) -> QuadExt:
        n = self.norm()
        if _is_poly(n):
            if n.degree != 0:
                raise NotInvertible(f"norm {n} is not a unit")
            n = n.coeffs[0]
        if n == 0:
            raise NotInvertible(f"{self} has zero norm")
        return QuadExt(self.a / n, -self.b / n, self.d)

    def div_root(self):
        """Exact quotient ``(b*y) / y = b`` for a pure-root element (a = 0)."""
        if not _is_zero(self.a):
            raise NotInvertible(f"{self} is not divisible by sqrt({self.d})")
        return QuadExt(self.b, 0, self.d)

    def is_zero(self) -> bool:
        return _is_zero(self.a) and _is_zero(self.b)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return self.d == other.d and self.a == other.a and self.b == other.b
        if isinstance(other, _RationalABC) or _is_poly(other):
            return _is_zero(self.b) and self.a == other
        return NotImplemented

    def __hash__(self):
        if _is_zero(self.b):
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __repr__(self):
        return f"QuadExt({self.a!r}, {self.b!r}, d={self.d!r})"

    def __str__(self):
        a, b = str(self.a), str(self.b)
        if _is_poly(self.a) and " " in a:
            a = f"({a})"
        if " " in b or "/" in b:
            b = f"({b})"
        return f"{a} + {b}*sqrt({self.d})"


def quadext_mul(u: QuadExt, v: QuadExt) -> QuadExt:
    return u * v


def quadext_pow(u: QuadExt, n: int) -> QuadExt:
    if n < 0:
        raise ValueError("quadext_pow expects n >= 0")
    return u ** n


def quadext_inv(u: QuadExt) -> QuadExt:
    return u.inverse()


def sqrt_power(d, m: int) -> QuadExt:
    """``sqrt(d)**m`` for any integer m, e.g. 5^((1-n)/2) without radicals."""
    y = QuadExt(0, 1, d)
    return y ** m
