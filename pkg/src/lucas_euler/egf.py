"""Truncated exponential generating functions.

A series ``sum a_n z^n / n!`` is stored through its coefficients ``a_n``, so
the product is a binomial convolution with integer weights.  Only linear
argument scaling ``z -> c z`` is supported, no general composition.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Callable, Optional, Sequence

from .exact import QuadExt, binomial, NotInvertible
from .polyring import X, Poly
from .sequences import LAMBDA_D, SequenceCache, default_cache

__all__ = [
    "Ring",
    "RATIONAL",
    "POLY",
    "QUAD5",
    "QUAD_I",
    "POLYQUAD5",
    "POLYQUAD_LAMBDA",
    "EgfSeries",
    "RingMismatch",
    "egf_mul",
    "egf_recip",
    "egf_exp_linear",
    "egf_cosh_linear",
    "egf_sinh_linear",
    "egf_sinh_over_root",
    "egf_tanh_linear",
    "egf_from_function",
    "build_gf",
    "DEFAULT_ORDER",
]

DEFAULT_ORDER = 16


class RingMismatch(ValueError):
    """Series with different orders or coefficient rings were combined."""


@dataclass(frozen=True)
class Ring:
    """Coefficient ring descriptor.

    ``kind`` is one of ``rational``, ``poly`` (Q[x]), ``quad`` (Q(sqrt d)) or
    ``polyquad`` (Q[x][y]/(y^2 - d)).
    """

    kind: str
    d: object = None

    def __call__(self, value):
        """Coerce ``value`` into this ring."""
        kind = self.kind
        if kind == "rational":
            if isinstance(value, _RationalABC):
                return Fraction(value)
            raise TypeError(f"{value!r} is not rational")
        if kind == "poly":
            if isinstance(value, (Poly, _RationalABC)):
                return Poly.lift(value)
            raise TypeError(f"{value!r} is not in Q[x]")
        if isinstance(value, QuadExt):
            if value.d != self.d:
                raise RingMismatch(f"d={value.d} does not match ring d={self.d}")
            if kind == "polyquad":
                return QuadExt(Poly.lift(value.a), Poly.lift(value.b), Poly.lift(self.d))
            if isinstance(value.a, Poly) or isinstance(value.b, Poly):
                raise TypeError(f"{value} has polynomial components")
            return value
        if kind == "quad" and isinstance(value, Poly):
            raise TypeError(f"{value} is not in Q(sqrt {self.d})")
        if kind == "polyquad":
            return QuadExt(Poly.lift(value), Poly(), Poly.lift(self.d))
        return QuadExt(value, 0, self.d)

    def zero(self):
        return self(0)

    def one(self):
        return self(1)

    def inverse(self, value):
        if self.kind == "rational":
            if value == 0:
                raise NotInvertible("zero has no inverse")
            return 1 / value
        if self.kind == "poly":
            if value.degree != 0:
                raise NotInvertible(f"{value} is not a unit in Q[x]")
            return Poly.lift(1 / value.coeffs[0])
        return self(value.inverse())

    def __str__(self):
        if self.d is None:
            return self.kind
        return f"{self.kind}({self.d})"


RATIONAL = Ring("rational")
POLY = Ring("poly")
QUAD5 = Ring("quad", Fraction(5))
QUAD_I = Ring("quad", Fraction(-1))
POLYQUAD5 = Ring("polyquad", Poly.lift(5))
POLYQUAD_LAMBDA = Ring("polyquad", LAMBDA_D)


@dataclass(frozen=True, eq=False)
class EgfSeries:
    """Truncated EGF: ``coeffs[n]`` is the coefficient of ``z^n / n!``."""

    coeffs: tuple
    ring: Ring

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def _check(self, other: EgfSeries) -> None:
        if self.order != other.order:
            raise RingMismatch(f"order {self.order} vs {other.order}")
        if self.ring != other.ring:
            raise RingMismatch(f"ring {self.ring} vs {other.ring}")

    def __add__(self, other):
        if not isinstance(other, EgfSeries):
            other = constant(other, self.order, self.ring)
        self._check(other)
        return EgfSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.ring)

    __radd__ = __add__

    def __neg__(self):
        return EgfSeries(tuple(-a for a in self.coeffs), self.ring)

    def __sub__(self, other):
        if not isinstance(other, EgfSeries):
            other = constant(other, self.order, self.ring)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, EgfSeries):
            return egf_mul(self, other)
        c = self.ring(other)
        return EgfSeries(tuple(c * a for a in self.coeffs), self.ring)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, EgfSeries):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    __hash__ = None

    def recip(self) -> EgfSeries:
        return egf_recip(self)

    def scale_argument(self, c) -> EgfSeries:
        """The series of ``f(c z)``: coefficient ``a_n c^n``."""
        c = self.ring(c)
        out, power = [], self.ring.one()
        for a in self.coeffs:
            out.append(a * power)
            power = power * c
        return EgfSeries(tuple(out), self.ring)

    def with_coefficient(self, n: int, value) -> EgfSeries:
        cs = list(self.coeffs)
        cs[n] = self.ring(value)
        return EgfSeries(tuple(cs), self.ring)

    def first_difference(self, other: EgfSeries) -> Optional[int]:
        """Lowest order at which the two series disagree, or None."""
        self._check(other)
        for n, (a, b) in enumerate(zip(self.coeffs, other.coeffs)):
            if a != b:
                return n
        return None


def constant(value, order: int, ring: Ring) -> EgfSeries:
    zero = ring.zero()
    return EgfSeries((ring(value),) + (zero,) * order, ring)


def egf_from_function(fn: Callable[[int], object], order: int, ring: Ring) -> EgfSeries:
    return EgfSeries(tuple(ring(fn(n)) for n in range(order + 1)), ring)


def egf_mul(f: EgfSeries, g: EgfSeries) -> EgfSeries:
    f._check(g)
    a, b = f.coeffs, g.coeffs
    zero = f.ring.zero()
    out = []
    for n in range(len(a)):
        s = zero
        for k in range(n + 1):
            if a[k] and b[n - k]:
                s = s + binomial(n, k) * (a[k] * b[n - k])
        out.append(s)
    return EgfSeries(tuple(out), f.ring)


def egf_recip(f: EgfSeries) -> EgfSeries:
    """g with f g = 1 up to the truncation order."""
    a = f.coeffs
    inv0 = f.ring.inverse(a[0])
    g = []
    for n in range(len(a)):
        s = f.ring.one() if n == 0 else f.ring.zero()
        for k in range(1, n + 1):
            if a[k]:
                s = s - binomial(n, k) * (a[k] * g[n - k])
        g.append(inv0 * s)
    return EgfSeries(tuple(g), f.ring)


def _powers(c, order: int, ring: Ring) -> list:
    c = ring(c)
    out, p = [], ring.one()
    for _ in range(order + 1):
        out.append(p)
        p = p * c
    return out


def egf_exp_linear(c, order: int, ring: Ring = RATIONAL) -> EgfSeries:
    """exp(c z)."""
    return EgfSeries(tuple(_powers(c, order, ring)), ring)


def egf_cosh_linear(c, order: int, ring: Ring = RATIONAL) -> EgfSeries:
    """cosh(c z)."""
    zero = ring.zero()
    p = _powers(c, order, ring)
    return EgfSeries(tuple(v if n % 2 == 0 else zero for n, v in enumerate(p)), ring)


def egf_sinh_linear(c, order: int, ring: Ring = RATIONAL) -> EgfSeries:
    """sinh(c z)."""
    zero = ring.zero()
    p = _powers(c, order, ring)
    return EgfSeries(tuple(v if n % 2 else zero for n, v in enumerate(p)), ring)


def egf_tanh_linear(c, order: int, ring: Ring = RATIONAL) -> EgfSeries:
    """tanh(c z) as sinh(c z) * (1 / cosh(c z))."""
    return egf_sinh_linear(c, order, ring) * egf_cosh_linear(c, order, ring).recip()


def egf_sinh_over_root(k, order: int, ring: Ring) -> EgfSeries:
    """sinh(k y z) / y in a quadratic ring with y = sqrt(d).

    Odd powers of ``k y`` are pure multiples of ``y`` so the quotient stays
    exact even though ``y`` itself is not invertible.
    """
    if ring.kind not in ("quad", "polyquad"):
        raise RingMismatch("sinh over root needs a quadratic ring")
    y = ring(QuadExt(0, 1, ring.d))
    s = egf_sinh_linear(ring(k) * y, order, ring)
    return EgfSeries(tuple(c.div_root() if n % 2 else c for n, c in enumerate(s.coeffs)), ring)


# -- named generating functions ----------------------------------------------

def _bernoulli_kernel(order: int, ring: Ring) -> EgfSeries:
    # (e^z - 1)/z has EGF coefficients 1/(n+1)
    return egf_from_function(lambda n: Fraction(1, n + 1), order, ring)


def build_gf(
    name: str,
    order: int = DEFAULT_ORDER,
    *,
    x=None,
    scale=None,
    j: Optional[int] = None,
    ring: Optional[Ring] = None,
    cache: SequenceCache = default_cache,
) -> EgfSeries:
    """Closed-form right-hand side of a named generating function.

    ``H`` and ``I`` take ``x`` (default: symbolic) and an optional argument
    scale, giving H(x, scale*z) and I(x, scale*z).  ``b1``, ``b2``, ``c1``,
    ``c2`` are symbolic in x over Q[x][sqrt(9x^2-1)].  ``L`` is the EGF of
    L_{jn}, built over a ring containing sqrt 5.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    if name in ("H", "I"):
        if x is None:
            x = X
        if ring is None:
            ring = RATIONAL if isinstance(x, _RationalABC) else POLY
        ex = egf_exp_linear(x, order, ring)
        if name == "H":
            f = ex * _bernoulli_kernel(order, ring).recip()
        else:
            f = 2 * ex * (egf_exp_linear(1, order, ring) + 1).recip()
        return f if scale is None else f.scale_argument(scale)
    if name in ("b1", "b2", "c1", "c2"):
        ring = ring or POLYQUAD_LAMBDA
        if ring.d != LAMBDA_D:
            raise RingMismatch(f"{name} lives over d = 9x^2 - 1")
        y = ring(QuadExt(0, 1, LAMBDA_D))
        k = 6 * X
        growth = egf_exp_linear(18 * X * X - 1, order, ring)
        cosh = egf_cosh_linear(k * y, order, ring)
        if name == "c2":
            return growth * cosh
        if name == "b2":
            return growth * egf_sinh_over_root(k, order, ring)
        if name == "c1":
            return growth * (3 * X * cosh + y * egf_sinh_linear(k * y, order, ring))
        return growth * (3 * X * egf_sinh_over_root(k, order, ring) + cosh)
    if name == "L":
        if j is None or j < 1:
            raise ValueError("L needs j >= 1")
        ring = ring or POLYQUAD5
        fj, fj1 = cache.fibonacci(j), cache.fibonacci(j - 1)
        half_root = QuadExt(0, Fraction(fj, 2), 5)
        return 2 * egf_exp_linear(Fraction(fj, 2) + fj1, order, ring) * egf_cosh_linear(half_root, order, ring)
    raise KeyError(f"unknown generating function {name!r}")


def series_from_terms(terms: Sequence, ring: Ring) -> EgfSeries:
    return EgfSeries(tuple(ring(t) for t in terms), ring)
