"""Functional equations between generating functions, checked coefficientwise.

Each equation is a list of ``(label, lhs, rhs)`` series pairs that must agree
up to the truncation order.  Theorem-level equations are symbolic in x: their
coefficients live in Q[x][y] with y^2 = 9x^2 - 1 (or y^2 = 5 for the Lucas
relations), and equality includes a vanishing y-component.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Optional

from .egf import (
    DEFAULT_ORDER,
    POLY,
    POLYQUAD5,
    POLYQUAD_LAMBDA,
    RATIONAL,
    EgfSeries,
    build_gf,
    egf_cosh_linear,
    egf_exp_linear,
    egf_from_function,
    egf_sinh_linear,
    egf_tanh_linear,
)
from .exact import QuadExt, binomial
from .polyring import X
from .results import CheckResult, render
from .sequences import BETA, LAMBDA_D, SequenceCache, default_cache

__all__ = ["GfEquation", "GF_EQUATIONS", "list_gf_equations", "check_gf_equation"]

DEFINITION_ORDER = 12
SAMPLE_POINTS = (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(-3, 4), Fraction(2, 3))


class _Builder:
    """build_gf with optional per-name replacements (used for negative controls)."""

    def __init__(self, order: int, overrides: Mapping[str, EgfSeries], cache: SequenceCache):
        self.order = order
        self.overrides = dict(overrides or {})
        self.cache = cache

    def __call__(self, name: str, **kw) -> EgfSeries:
        if name in self.overrides and not kw:
            return self.overrides[name]
        return build_gf(name, self.order, cache=self.cache, **kw)


def _root():
    return POLYQUAD_LAMBDA(QuadExt(0, 1, LAMBDA_D))


# -- theorem-level equations ---------------------------------------------------

def _thm1_tanh(gf, cache, **_):
    s = 6 * X * _root()
    lhs = gf("I", x=Fraction(0), scale=2 * s, ring=POLYQUAD_LAMBDA)
    rhs = 1 - egf_tanh_linear(s, gf.order, POLYQUAD_LAMBDA)
    return [("I(0,12xyz) = 1 - tanh(6xyz)", lhs, rhs)]


def _thm1_chain(gf, cache, **_):
    ring, N = POLYQUAD_LAMBDA, gf.order
    y = _root()
    t = 12 * X * y
    c2, b2 = gf("c2"), gf("b2")

    def convolution(n):
        total = sum(
            (binomial(n, k) * cache.lucas_balancing_poly(2 * k) * t ** (n - k) * cache.euler_at_zero(n - k)
             for k in range(n)),
            ring.zero(),
        )
        return total + cache.lucas_balancing_poly(2 * n)

    first = egf_from_function(convolution, N, ring)
    second = c2 * gf("I", x=Fraction(0), scale=t, ring=ring)
    s = 6 * X * y
    third = egf_exp_linear(18 * X * X - 1, N, ring) * (
        egf_cosh_linear(s, N, ring) - egf_sinh_linear(s, N, ring)
    )
    fourth = c2 - y * b2
    fifth = egf_from_function(
        lambda n: cache.lucas_balancing_poly(2 * n) - y * cache.balancing_poly(2 * n), N, ring
    )
    return [
        ("coefficient sums = c2 I(0,12xyz)", first, second),
        ("c2 I(0,12xyz) = e^((18x^2-1)z)(cosh - sinh)", second, third),
        ("e^((18x^2-1)z)(cosh - sinh) = c2 - y b2", third, fourth),
        ("c2 - y b2 = sum (C_2n - y B*_2n) z^n/n!", fourth, fifth),
    ]


def _thm2(gf, cache, **_):
    ring = POLYQUAD_LAMBDA
    s = 6 * X * _root()
    lhs = gf("c2") * gf("I", x=Fraction(1, 2), scale=2 * s, ring=ring)
    rhs = egf_exp_linear(18 * X * X - 1, gf.order, ring)
    return [("c2 I(1/2,12xyz) = e^((18x^2-1)z)", lhs, rhs)]


def _thm3_tanh(gf, cache, **_):
    ring, N = POLYQUAD_LAMBDA, gf.order
    lhs = gf("I", x=Fraction(1, 2), scale=2, ring=ring)
    rhs = egf_exp_linear(1, N, ring) * (1 - egf_tanh_linear(1, N, ring))
    return [("I(1/2,2z) = e^z (1 - tanh z)", lhs, rhs)]


def _thm3(gf, cache, **_):
    ring, N = POLYQUAD_LAMBDA, gf.order
    y = _root()
    s = 6 * X * y
    c2 = gf("c2")
    lhs = c2 * gf("I", x=Fraction(1, 2), scale=2 * s, ring=ring)
    rhs = egf_exp_linear(s, N, ring) * (c2 - y * gf("b2"))
    return [("c2 I(1/2,12xyz) = e^(6xyz)(c2 - y b2)", lhs, rhs)]


def _thm4(gf, cache, **_):
    ring, N = POLYQUAD_LAMBDA, gf.order
    y = _root()
    cosh_rel = (
        egf_cosh_linear(Fraction(1, 2), N, ring) * gf("I", ring=ring),
        egf_exp_linear(X - Fraction(1, 2), N, ring),
    )
    lhs = gf("c2") * gf("I", scale=12 * X * y, ring=ring)
    rhs = egf_exp_linear(18 * X * X - 1 + 6 * X * (2 * X - 1) * y, N, ring)
    return [
        ("cosh(z/2) I(x,z) = e^((x-1/2)z)", *cosh_rel),
        ("c2 I(x,12xyz) = e^((18x^2-1+6x(2x-1)y)z)", lhs, rhs),
    ]


def _thm5(gf, cache, j_max=6, **_):
    ring, N = POLYQUAD5, gf.order
    sqrt5_x = QuadExt(0, X, 5)
    pairs = []
    for j in range(1, j_max + 1):
        fj, fj1 = cache.fibonacci(j), cache.fibonacci(j - 1)
        lhs = gf("L", j=j) * gf("I", scale=QuadExt(0, fj, 5), ring=ring)
        rate = (sqrt5_x + BETA) * fj + fj1
        rhs = 2 * egf_exp_linear(rate, N, ring)
        pairs.append((f"j={j}: L(z) I(x,sqrt5 F_j z) = 2e^(((sqrt5 x+beta)F_j+F_(j-1))z)", lhs, rhs))
    return pairs


# -- definitional equalities -----------------------------------------------------

def _definitional(name, index, family):
    def equation(gf, cache, **_):
        terms = egf_from_function(
            lambda n: getattr(cache, family)(2 * n + index), gf.order, POLYQUAD_LAMBDA
        )
        return [(f"{name} closed form = sum of coefficients", gf(name), terms)]

    return equation


def _def_h(gf, cache, **_):
    pairs = []
    for x0 in (X,) + SAMPLE_POINTS:
        ring = POLY if x0 is X else RATIONAL
        terms = egf_from_function(lambda n: cache.bernoulli_poly(n)(x0), gf.order, ring)
        pairs.append((f"H(x={x0}) = sum B_n(x) z^n/n!", gf("H", x=x0), terms))
    return pairs


def _def_i(gf, cache, **_):
    pairs = []
    for x0 in (X,) + SAMPLE_POINTS:
        ring = POLY if x0 is X else RATIONAL
        terms = egf_from_function(lambda n: cache.euler_poly(n)(x0), gf.order, ring)
        pairs.append((f"I(x={x0}) = sum E_n(x) z^n/n!", gf("I", x=x0), terms))
    return pairs


def _def_numbers(gf, cache, **_):
    N = gf.order
    euler = egf_from_function(cache.euler_number, N, RATIONAL)
    bern = egf_from_function(cache.bernoulli_number, N, RATIONAL)
    kernel = egf_from_function(lambda n: Fraction(1, n + 1), N, RATIONAL)
    return [
        ("1/cosh z = sum E_n z^n/n!", egf_cosh_linear(1, N).recip(), euler),
        ("I(1/2,2z) = sum E_n z^n/n!", gf("I", x=Fraction(1, 2), scale=2), euler),
        ("z/(e^z-1) = sum B_n z^n/n!", kernel.recip(), bern),
    ]


@dataclass(frozen=True)
class GfEquation:
    id: str
    kind: str  # "theorem" | "definition"
    statement: str
    default_order: int
    relations: Callable


GF_EQUATIONS = {
    e.id: e
    for e in [
        GfEquation("thm1_tanh", "theorem", "I(0,12x sqrt(9x^2-1) z) = 1 - tanh(6x sqrt(9x^2-1) z)", DEFAULT_ORDER, _thm1_tanh),
        GfEquation("thm1_chain", "theorem", "sum -> c2 I(0,.) -> e^((18x^2-1)z)(cosh - sinh) -> c2 - y b2 -> sum", DEFAULT_ORDER, _thm1_chain),
        GfEquation("thm2", "theorem", "c2(x,z) I(1/2,12x sqrt(9x^2-1) z) = e^((18x^2-1)z)", DEFAULT_ORDER, _thm2),
        GfEquation("thm3_tanh", "theorem", "I(1/2,2z) = e^z (1 - tanh z)", DEFAULT_ORDER, _thm3_tanh),
        GfEquation("thm3", "theorem", "c2 I(1/2,12xyz) = e^(6xyz) (c2 - y b2)", DEFAULT_ORDER, _thm3),
        GfEquation("thm4", "theorem", "cosh(z/2) I(x,z) = e^((x-1/2)z); c2 I(x,12xyz) = e^((18x^2-1+6x(2x-1)y)z)", DEFAULT_ORDER, _thm4),
        GfEquation("thm5", "theorem", "L(z) I(x, sqrt5 F_j z) = 2 e^(((sqrt5 x + beta) F_j + F_(j-1)) z)", DEFAULT_ORDER, _thm5),
        GfEquation("genf_b1", "definition", "sum B*_(2n+1)(x) z^n/n!", DEFINITION_ORDER, _definitional("b1", 1, "balancing_poly")),
        GfEquation("genf_b2", "definition", "sum B*_(2n)(x) z^n/n!", DEFINITION_ORDER, _definitional("b2", 0, "balancing_poly")),
        GfEquation("genf_c1", "definition", "sum C_(2n+1)(x) z^n/n!", DEFINITION_ORDER, _definitional("c1", 1, "lucas_balancing_poly")),
        GfEquation("genf_c2", "definition", "sum C_(2n)(x) z^n/n!", DEFINITION_ORDER, _definitional("c2", 0, "lucas_balancing_poly")),
        GfEquation("def_H", "definition", "z e^(xz)/(e^z-1) = sum B_n(x) z^n/n!", DEFINITION_ORDER, _def_h),
        GfEquation("def_I", "definition", "2 e^(xz)/(e^z+1) = sum E_n(x) z^n/n!", DEFINITION_ORDER, _def_i),
        GfEquation("def_numbers", "definition", "1/cosh z, I(1/2,2z), z/(e^z-1) give E_n and B_n", DEFINITION_ORDER, _def_numbers),
    ]
}


def list_gf_equations(kind: Optional[str] = None) -> list[GfEquation]:
    return [e for e in GF_EQUATIONS.values() if kind is None or e.kind == kind]


def check_gf_equation(
    eq_id: str,
    order: Optional[int] = None,
    *,
    j_max: int = 6,
    overrides: Optional[Mapping[str, EgfSeries]] = None,
    cache: SequenceCache = default_cache,
) -> CheckResult:
    """Compare both sides of an equation coefficientwise up to ``order``.

    ``overrides`` replaces named series (``c2``, ``b2``, ...) before the check,
    which is how perturbed inputs are fed in.
    """
    if eq_id not in GF_EQUATIONS:
        raise KeyError(f"unknown generating-function equation {eq_id!r}")
    eq = GF_EQUATIONS[eq_id]
    order = eq.default_order if order is None else order
    if order < 1:
        raise ValueError("order must be >= 1")
    grid = {"order": order}
    if eq_id == "thm5":
        grid["j_max"] = j_max
    start = time.perf_counter()
    gf = _Builder(order, overrides, cache)
    failure = None
    for label, lhs, rhs in eq.relations(gf, cache, j_max=j_max):
        n = lhs.first_difference(rhs)
        if n is not None and (failure is None or n < failure["order"]):
            failure = {"order": n, "relation": label, "lhs": render(lhs[n]), "rhs": render(rhs[n])}
    millis = round((time.perf_counter() - start) * 1000, 3)
    return CheckResult(eq_id, grid, "fail" if failure else "pass", failure, millis)
