"""Dense univariate polynomials over the rationals."""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC

from .exact import QuadExt

__all__ = ["Poly", "X", "poly_mul", "poly_eval_rational", "poly_eval_quadext"]


class Poly:
    """Polynomial in ``x`` with Fraction coefficients, lowest degree first.

    Trailing zeros are stripped, so the zero polynomial has ``coeffs == ()``
    and ``degree == -1``.  Integers and Fractions mix freely with polynomials
    and compare equal to the matching constant polynomial.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def lift(cls, value) -> Poly:
        if isinstance(value, Poly):
            return value
        return cls((value,))

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> Poly:
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    @staticmethod
    def _other(other):
        if isinstance(other, Poly):
            return other.coeffs
        if isinstance(other, _RationalABC):
            return (Fraction(other),)
        return None

    def __add__(self, other):
        oc = self._other(other)
        if oc is None:
            return NotImplemented
        a, b = self.coeffs, oc
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __pos__(self):
        return self

    def __sub__(self, other):
        oc = self._other(other)
        if oc is None:
            return NotImplemented
        return self + Poly([-c for c in oc])

    def __rsub__(self, other):
        oc = self._other(other)
        if oc is None:
            return NotImplemented
        return Poly(oc) - self

    def __mul__(self, other):
        if isinstance(other, _RationalABC):
            other = Fraction(other)
            return Poly([c * other for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, _RationalABC):
            other = Fraction(other)
            return Poly([c / other for c in self.coeffs])
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result, base = Poly((1,)), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __call__(self, t):
        """Horner evaluation at ``t`` (a rational, a Poly, or a QuadExt)."""
        result = Fraction(0)
        for c in reversed(self.coeffs):
            result = result * t + c
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, _RationalABC):
            if not other:
                return not self.coeffs
            return self.coeffs == (Fraction(other),)
        return NotImplemented

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self[0])
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        out = ""
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            power = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if not power:
                body = str(mag)
            elif mag == 1:
                body = power
            else:
                body = f"{mag}*{power}"
            if not out:
                out = f"-{body}" if c < 0 else body
            else:
                out += f" - {body}" if c < 0 else f" + {body}"
        return out


X = Poly((0, 1))


def poly_mul(p: Poly, q: Poly) -> Poly:
    return p * q


def poly_eval_rational(p: Poly, x0) -> Fraction:
    return Fraction(p(Fraction(x0)))


def poly_eval_quadext(p: Poly, pt: QuadExt) -> QuadExt:
    value = p(pt)
    if not isinstance(value, QuadExt):
        value = QuadExt(value, 0, pt.d)
    return value
