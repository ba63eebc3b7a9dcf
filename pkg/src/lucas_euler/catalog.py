"""Registry of Lucas-Euler, Fibonacci-Bernoulli and balancing-polynomial
identities, each as a pair of exactly evaluable sides.

Sums follow one convention throughout: ``binomial(n, k) == 0`` outside
``0 <= k <= n`` and a summand whose binomial vanishes is skipped without being
evaluated (so lower bounds like ``k = 0`` vs ``k = 1`` agree).  Identities that
carry odd powers of sqrt 5 are evaluated in Q(sqrt 5) (or Q[x](sqrt 5) when
symbolic in x) rather than squared away.
"""
from __future__ import annotations

import dataclasses
import itertools
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Optional

from .exact import QuadExt, binomial, sqrt_power
from .polyring import X, Poly, poly_eval_quadext
from .results import CheckResult, render
from .sequences import ALPHA, BETA, IMAG, LAMBDA_D, default_cache

__all__ = [
    "IdentitySpec",
    "Grid",
    "CATALOG",
    "UnknownIdentity",
    "DomainError",
    "list_identities",
    "get_identity",
    "evaluate_identity",
    "check_identity",
    "grid_points",
    "perturbed",
]

_c = default_cache
F = _c.fibonacci
L = _c.lucas
E = _c.euler_number
B = _c.bernoulli_number
E0 = _c.euler_at_zero
Bstar = _c.balancing_poly
C = _c.lucas_balancing_poly
Epoly = _c.euler_poly
Bpoly = _c.bernoulli_poly

Y_LAMBDA = QuadExt(0, 1, LAMBDA_D)  # sqrt(9x^2 - 1)
ROOT5 = QuadExt(0, 1, 5)
ROOT5_X = QuadExt(0, X, 5)
ZERO5 = QuadExt(0, 0, 5)
PZERO5 = QuadExt(Poly(), Poly(), Poly.lift(5))
PZERO_LAMBDA = QuadExt(Poly(), Poly(), LAMBDA_D)


class UnknownIdentity(KeyError):
    pass


class DomainError(ValueError):
    pass


def _sum(terms: Iterable, start=Fraction(0)):
    total = start
    for t in terms:
        total = total + t
    return total


def _half_pow(n: int) -> Fraction:
    return Fraction(1, 2**n)


@lru_cache(maxsize=None)
def _root5_fj_pow(j: int, sign: int, m: int) -> QuadExt:
    return (sign * F(j) * ROOT5) ** m


@lru_cache(maxsize=None)
def _lambda_term_pow(coeff: int, m: int) -> QuadExt:
    # (coeff * x * sqrt(9x^2-1))^m
    return (coeff * X * Y_LAMBDA) ** m


# -- classical Lucas/Fibonacci vs Euler/Bernoulli ------------------------------

def byrd_lhs(n, coeff=Fraction(5, 4)):
    return _sum(binomial(n, 2 * k) * coeff**k * L(n - 2 * k) * E(2 * k) for k in range(n // 2 + 1))


def byrd_rhs(n):
    return 2 * _half_pow(n)


def wang_lhs(n, j):
    return _sum(
        binomial(n, 2 * k) * Fraction(5, 4) ** k * F(j) ** (2 * k) * L(j * (n - 2 * k)) * E(2 * k)
        for k in range(n // 2 + 1)
    )


def wang_rhs(n, j):
    return 2 * _half_pow(n) * L(j) ** n


def castellanos_lhs(n, j):
    return _sum(
        binomial(2 * n, 2 * k) * _half_pow(2 * k + 1) * L(2 * (n - k) * j) * L(j) ** (2 * k) * E(2 * k)
        for k in range(n + 1)
    )


def castellanos_rhs(n, j):
    return Fraction(5, 4) ** n * F(j) ** (2 * n)


def zhangma_beta_lhs(n):
    return _sum(
        (binomial(n, k) * F(k) * B(n - k)) * ROOT5 ** (n - k) for k in range(n + 1)
    ) + ZERO5


def zhangma_beta_rhs(n):
    return n * BETA ** (n - 1) if n else ZERO5


def zhangma_lucas_lhs(n):
    return _sum(binomial(n, 2 * k) * 5**k * F(n - 2 * k) * B(2 * k) for k in range(n // 2 + 1))


def zhangma_lucas_rhs(n):
    return Fraction(n * L(n - 1), 2) if n else Fraction(0)


def frogoy1_lhs(n, j):
    return _sum(
        (binomial(n, k) * F(j * k) * B(n - k)) * _root5_fj_pow(j, 1, n - k) for k in range(n + 1)
    ) + ZERO5


def frogoy1_rhs(n, j):
    return n * F(j) * BETA ** (j * (n - 1)) if n else ZERO5


def frogoy2_lhs(n, j):
    return _sum(
        binomial(n, 2 * k) * (20**k - 5**k) * F(2 * j) ** (2 * k) * L(2 * j * (n - 2 * k)) * B(2 * k)
        for k in range(n // 2 + 1)
    )


def frogoy2_rhs(n, j):
    return Fraction(5 * n, 2) * F(2 * j) * F(2 * j * (n - 1)) if n else Fraction(0)


def kelisky_lhs(n, j):
    return _sum(
        binomial(n, 2 * k) * 5**k * F(j) ** (2 * k) * F(j * (n - 2 * k)) * B(2 * k)
        for k in range(n // 2 + 1)
    )


def kelisky_rhs(n, j):
    return Fraction(n, 2) * F(j) * L(j * (n - 1)) if n else Fraction(0)


# -- balancing polynomials and Euler numbers ------------------------------------

def thm1_lhs(n):
    weight = 144 * X * X * LAMBDA_D
    return _sum(
        (binomial(n - 1, 2 * k - 1) * E0(2 * k - 1)) * C(2 * (n - 2 * k)) * weight**k
        for k in range(1, n // 2 + 1)
    ) + Poly()


def thm1_rhs(n):
    return 12 * X * (1 - 9 * X * X) * Bstar(2 * n - 2)


def cor2_lhs(n, j):
    return _sum(
        binomial(n - 1, 2 * k - 1) * Fraction(5) ** (k - 1) * Fraction(F(2 * j)) ** (2 * k - 1)
        * L(2 * j * (n - 2 * k)) * E0(2 * k - 1)
        for k in range(n // 2 + 1)
        if binomial(n - 1, 2 * k - 1)
    )


def cor2_rhs(n, j):
    return Fraction(-F(2 * j * (n - 1)))


def cor2_bernoulli_lhs(n, j):
    # k = 0 has the vanishing factor 20^0 - 5^0
    return _sum(
        binomial(n - 1, 2 * k - 1) * Fraction(20**k - 5**k, k) * F(2 * j) ** (2 * k - 1)
        * L(2 * j * (n - 2 * k)) * B(2 * k)
        for k in range(1, n // 2 + 1)
    )


def cor2_bernoulli_rhs(n, j):
    return Fraction(5 * F(2 * j * (n - 1)))


def thm2_lhs(n):
    weight = 36 * X * X * LAMBDA_D
    return _sum(
        (binomial(n, 2 * k) * E(2 * k)) * C(2 * (n - 2 * k)) * weight**k for k in range(n // 2 + 1)
    ) + Poly()


def thm2_rhs(n):
    return (18 * X * X - 1) ** n


def cor5_lhs(n, j):
    return _sum(
        binomial(n, 2 * k) * Fraction(5, 4) ** k * F(2 * j) ** (2 * k) * L(2 * j * (n - 2 * k)) * E(2 * k)
        for k in range(n // 2 + 1)
    )


def cor5_rhs(n, j):
    return 2 * _half_pow(n) * L(2 * j) ** n


def cor5_j1_lhs(n):
    return _sum(
        binomial(n, 2 * k) * Fraction(5, 4) ** k * L(2 * (n - 2 * k)) * E(2 * k) for k in range(n // 2 + 1)
    )


def cor5_j1_rhs(n):
    return 2 * Fraction(3, 2) ** n


def cor5_j2_lhs(n):
    return _sum(
        binomial(n, 2 * k) * Fraction(45, 4) ** k * L(4 * (n - 2 * k)) * E(2 * k) for k in range(n // 2 + 1)
    )


def cor5_j2_rhs(n):
    return 2 * Fraction(7, 2) ** n


def thm3_lhs(n):
    return thm2_lhs(n) + PZERO_LAMBDA


def thm3_rhs(n):
    return _sum(
        binomial(n, k) * (C(2 * k) - Y_LAMBDA * Bstar(2 * k)) * _lambda_term_pow(6, n - k)
        for k in range(n + 1)
    ) + PZERO_LAMBDA


def thm4_lhs(n):
    return _sum(
        (binomial(n, k) * C(2 * (n - k)) * Epoly(k)) * _lambda_term_pow(12, k) for k in range(n + 1)
    ) + PZERO_LAMBDA


def thm4_rhs(n):
    return (18 * X * X - 1 + 6 * X * (2 * X - 1) * Y_LAMBDA) ** n


# -- Lucas/Fibonacci numbers in arithmetic progression, sqrt 5 kept exact -------

def fbpol_lhs(n, j, sign=1):
    return _sum(
        (binomial(n, k) * F(j * k) * Bpoly(n - k)) * _root5_fj_pow(j, sign, n - k) for k in range(n + 1)
    ) + PZERO5


def fbpol_rhs(n, j, sign=1):
    if not n:
        return PZERO5
    base = (ROOT5_X + BETA) if sign == 1 else (ALPHA - ROOT5_X)
    return n * F(j) * (base * F(j) + F(j - 1)) ** (n - 1)


def thm5_lhs(n, j, sign=1):
    return _sum(
        (binomial(n, k) * L(j * k) * Epoly(n - k)) * _root5_fj_pow(j, sign, n - k) for k in range(n + 1)
    ) + PZERO5


def thm5_rhs(n, j, sign=1):
    base = (ROOT5_X + BETA) if sign == 1 else (ALPHA - ROOT5_X)
    return 2 * (base * F(j) + F(j - 1)) ** n + PZERO5


def main53_rhs(n, j, sign):
    return 2 * _half_pow(n) * (L(j) + sign * F(j) * ROOT5 * (2 * X - 1)) ** n + PZERO5


def main53_half_lhs(n, j, sign):
    return _sum(
        (binomial(n, k) * 2**k * L(j * k) * E(n - k)) * _root5_fj_pow(j, sign, n - k) for k in range(n + 1)
    ) + ZERO5


def main53_half_rhs(n, j, sign):
    return 2 * L(j) ** n + ZERO5


def _curious_lhs(point):
    def lhs(n, j, sign):
        return _sum(
            (binomial(n, k) * L(j * k)) * poly_eval_quadext(Epoly(n - k), point) * _root5_fj_pow(j, sign, n - k)
            for k in range(n + 1)
        ) + ZERO5

    return lhs


def curious_alpha_rhs(n, j, sign):
    return 2 * sign**n * L(j + sign) ** n + ZERO5


def curious_beta_rhs(n, j, sign):
    return 2 * (-sign) ** n * L(j - sign) ** n + ZERO5


def cor7_lhs(n, j, q):
    return _sum(
        (binomial(n, k) * (Fraction(1, q ** (n - k)) - 1) * L(j * k) * E0(n - k)) * _root5_fj_pow(j, 1, n - k)
        for k in range(n + 1)
    ) + ZERO5


def cor7_rhs(n, j, q):
    aj, bj = ALPHA**j, BETA**j
    return 2 * Fraction(1, q**n) * _sum(((-1) ** r * (r * aj + (q - r) * bj) ** n for r in range(1, q)), ZERO5)


def cor7_q3_rhs(n):
    return 2 * Fraction(1, 3**n) * F(2 * n) * ROOT5


def cor7_q5_rhs(n):
    if n % 2 == 0:
        return 2 * sqrt_power(5, 1 - n) * (F(2 * n) - F(n))
    return 2 * sqrt_power(5, -n) * (L(2 * n) - L(n))


def euler_mult_lhs(n, q):
    return q**n * _sum(((-1) ** r * Epoly(n)(X + Fraction(r, q)) for r in range(q)), Poly())


def euler_mult_rhs(n, q):
    return Epoly(n)(q * X) + Poly()


def _omega(s):
    return Fraction(1) if s % 2 == 0 else IMAG


def link1_lhs(n, s):
    point = _omega(s) * Fraction(L(s), 6)
    if isinstance(point, QuadExt):
        return poly_eval_quadext(Bstar(n), point), poly_eval_quadext(C(n), point)
    return Bstar(n)(point), C(n)(point)


def link1_rhs(n, s):
    w = _omega(s)
    b = w ** (n - 1) * Fraction(F(s * n), F(s))
    c = w**n * Fraction(L(s * n), 2)
    if isinstance(w, QuadExt):
        b, c = b + QuadExt(0, 0, -1), c + QuadExt(0, 0, -1)
    return b, c


# -- registry -------------------------------------------------------------------

@dataclass(frozen=True)
class IdentitySpec:
    """A named identity: ``lhs(**params) == rhs(**params)`` in ``ring``.

    ``anchor`` is the identity written out in plain ASCII, which is also the
    handle for locating it in the literature.
    """

    id: str
    anchor: str
    ring: str
    params: tuple
    lhs: Callable
    rhs: Callable
    n_min: int = 0
    default_n_max: int = 20
    symbolic_x: bool = False

    @property
    def domain(self) -> str:
        parts = []
        for p in self.params:
            parts.append({
                "n": f"n >= {self.n_min}",
                "j": "j >= 1",
                "s": "s >= 1",
                "q": "q odd >= 3",
                "sign": "sign in {+1, -1}",
            }[p])
        if self.symbolic_x:
            parts.append("x symbolic")
        return ", ".join(parts)


def _spec(id, anchor, ring, params, lhs, rhs, **kw):
    return IdentitySpec(id, anchor, ring, tuple(params.split()), lhs, rhs, **kw)


_ENTRIES = [
    _spec("byrd", "sum_k C(n,2k) (5/4)^k L_(n-2k) E_2k = 2^(1-n)", "rational", "n", byrd_lhs, byrd_rhs),
    _spec("wang", "sum_k C(n,2k) (5/4)^k F_j^2k L_(j(n-2k)) E_2k = 2^(1-n) L_j^n", "rational", "n j", wang_lhs, wang_rhs),
    _spec("castellanos", "sum_k C(2n,2k) 2^(-2k-1) L_(2(n-k)j) L_j^2k E_2k = (5/4)^n F_j^2n", "rational", "n j",
          castellanos_lhs, castellanos_rhs),
    _spec("zhangma_beta", "sum_k C(n,k) 5^((n-k)/2) F_k B_(n-k) = n beta^(n-1)", "quad(5)", "n",
          zhangma_beta_lhs, zhangma_beta_rhs),
    _spec("zhangma_lucas", "sum_k C(n,2k) 5^k F_(n-2k) B_2k = n L_(n-1) / 2", "rational", "n",
          zhangma_lucas_lhs, zhangma_lucas_rhs),
    _spec("frogoy1", "sum_k C(n,k) (sqrt5 F_j)^(n-k) F_jk B_(n-k) = n F_j beta^(j(n-1))", "quad(5)", "n j",
          frogoy1_lhs, frogoy1_rhs),
    _spec("frogoy2", "sum_k C(n,2k) (20^k - 5^k) F_2j^2k L_(2j(n-2k)) B_2k = (5n/2) F_2j F_(2j(n-1))",
          "rational", "n j", frogoy2_lhs, frogoy2_rhs),
    _spec("kelisky", "sum_k C(n,2k) 5^k F_j^2k F_(j(n-2k)) B_2k = (n/2) F_j L_(j(n-1))", "rational", "n j",
          kelisky_lhs, kelisky_rhs),
    _spec("thm1", "sum_(k>=1) C(n-1,2k-1) C_(2(n-2k))(x) (144x^2(9x^2-1))^k E_(2k-1)(0) = 12x(1-9x^2) B*_(2n-2)(x)",
          "poly", "n", thm1_lhs, thm1_rhs, n_min=1, symbolic_x=True),
    _spec("cor2", "sum_k C(n-1,2k-1) 5^(k-1) F_2j^(2k-1) L_(2j(n-2k)) E_(2k-1)(0) = -F_(2j(n-1))",
          "rational", "n j", cor2_lhs, cor2_rhs, n_min=1),
    _spec("cor2_bernoulli", "sum_(k>=1) C(n-1,2k-1) ((20^k - 5^k)/k) F_2j^(2k-1) L_(2j(n-2k)) B_2k = 5 F_(2j(n-1))",
          "rational", "n j", cor2_bernoulli_lhs, cor2_bernoulli_rhs, n_min=1),
    _spec("thm2", "sum_k C(n,2k) C_(2(n-2k))(x) (36x^2(9x^2-1))^k E_2k = (18x^2-1)^n", "poly", "n",
          thm2_lhs, thm2_rhs, symbolic_x=True),
    _spec("cor5", "sum_k C(n,2k) (5/4)^k F_2j^2k L_(2j(n-2k)) E_2k = 2^(1-n) L_2j^n", "rational", "n j",
          cor5_lhs, cor5_rhs),
    _spec("cor5_j1", "sum_k C(n,2k) (5/4)^k L_(2(n-2k)) E_2k = 2 (3/2)^n", "rational", "n", cor5_j1_lhs, cor5_j1_rhs),
    _spec("cor5_j2", "sum_k C(n,2k) (45/4)^k L_(4(n-2k)) E_2k = 2 (7/2)^n", "rational", "n", cor5_j2_lhs, cor5_j2_rhs),
    _spec("thm3", "sum_k C(n,2k) C_(2(n-2k))(x) (36x^2(9x^2-1))^k E_2k = sum_k C(n,k) (C_2k(x) - y B*_2k(x)) (6xy)^(n-k),"
          " y = sqrt(9x^2-1)", "polyquad(9x^2-1)", "n", thm3_lhs, thm3_rhs, symbolic_x=True),
    _spec("thm4", "sum_k C(n,k) C_(2(n-k))(x) (12xy)^k E_k(x) = (18x^2 - 1 + 6x(2x-1)y)^n, y = sqrt(9x^2-1)",
          "polyquad(9x^2-1)", "n", thm4_lhs, thm4_rhs, symbolic_x=True),
    _spec("fbpol_plus", "sum_k C(n,k) F_jk (sqrt5 F_j)^(n-k) B_(n-k)(x) = n F_j ((sqrt5 x + beta) F_j + F_(j-1))^(n-1)",
          "polyquad(5)", "n j", fbpol_lhs, fbpol_rhs, symbolic_x=True),
    _spec("fbpol_minus", "sum_k C(n,k) F_jk (-sqrt5 F_j)^(n-k) B_(n-k)(x) = n F_j ((alpha - sqrt5 x) F_j + F_(j-1))^(n-1)",
          "polyquad(5)", "n j", lambda n, j: fbpol_lhs(n, j, -1), lambda n, j: fbpol_rhs(n, j, -1), symbolic_x=True),
    _spec("thm5_plus", "sum_k C(n,k) L_jk (sqrt5 F_j)^(n-k) E_(n-k)(x) = 2 ((sqrt5 x + beta) F_j + F_(j-1))^n",
          "polyquad(5)", "n j", thm5_lhs, thm5_rhs, symbolic_x=True),
    _spec("thm5_minus", "sum_k C(n,k) L_jk (-sqrt5 F_j)^(n-k) E_(n-k)(x) = 2 ((alpha - sqrt5 x) F_j + F_(j-1))^n",
          "polyquad(5)", "n j", lambda n, j: thm5_lhs(n, j, -1), lambda n, j: thm5_rhs(n, j, -1), symbolic_x=True),
    _spec("main53", "sum_k C(n,k) L_jk (+-sqrt5 F_j)^(n-k) E_(n-k)(x) = 2^(1-n) (L_j +- sqrt5 F_j (2x-1))^n",
          "polyquad(5)", "n j sign", thm5_lhs, main53_rhs, symbolic_x=True),
    _spec("main53_half", "sum_k C(n,k) (+-sqrt5 F_j)^(n-k) 2^k L_jk E_(n-k) = 2 L_j^n", "quad(5)", "n j sign",
          main53_half_lhs, main53_half_rhs),
    _spec("curious_alpha", "sum_k C(n,k) (+-sqrt5 F_j)^(n-k) L_jk E_(n-k)(alpha) = 2 (+-1)^n L_(j+-1)^n",
          "quad(5)", "n j sign", _curious_lhs(ALPHA), curious_alpha_rhs),
    _spec("curious_beta", "sum_k C(n,k) (+-sqrt5 F_j)^(n-k) L_jk E_(n-k)(beta) = 2 (-+1)^n L_(j-+1)^n",
          "quad(5)", "n j sign", _curious_lhs(BETA), curious_beta_rhs),
    _spec("cor7", "sum_k C(n,k) (sqrt5 F_j)^(n-k) (q^-(n-k) - 1) L_jk E_(n-k)(0)"
          " = 2 q^-n sum_(r=1)^(q-1) (-1)^r (r alpha^j + (q-r) beta^j)^n", "quad(5)", "n j q",
          cor7_lhs, cor7_rhs, n_min=1),
    _spec("cor7_q3", "sum_k C(n,k) L_k sqrt5^(n-k) (3^-(n-k) - 1) E_(n-k)(0) = 2 3^-n sqrt5 F_2n", "quad(5)", "n",
          lambda n: cor7_lhs(n, 1, 3), cor7_q3_rhs, n_min=1),
    _spec("cor7_q5", "sum_k C(n,k) L_k sqrt5^(n-k) (5^-(n-k) - 1) E_(n-k)(0)"
          " = 2 5^((1-n)/2) (F_2n - F_n) [n even], 2 5^(-n/2) (L_2n - L_n) [n odd]", "quad(5)", "n",
          lambda n: cor7_lhs(n, 1, 5), cor7_q5_rhs, n_min=1),
    _spec("euler_mult", "q^n sum_(r=0)^(q-1) (-1)^r E_n(x + r/q) = E_n(qx), q odd", "poly", "n q",
          euler_mult_lhs, euler_mult_rhs, default_n_max=12, symbolic_x=True),
    _spec("link1", "B*_n(w_s L_s/6) = w_s^(n-1) F_sn / F_s and C_n(w_s L_s/6) = w_s^n L_sn / 2,"
          " w_s = 1 (s even), i (s odd)", "quad(-1) | rational", "n s", link1_lhs, link1_rhs),
]

CATALOG: dict[str, IdentitySpec] = {e.id: e for e in _ENTRIES}


def list_identities() -> list[tuple[str, str, str, str]]:
    """(id, anchor, ring, domain) for every registered identity, in registry order."""
    return [(e.id, e.anchor, e.ring, e.domain) for e in CATALOG.values()]


def get_identity(identity) -> IdentitySpec:
    if isinstance(identity, IdentitySpec):
        return identity
    try:
        return CATALOG[identity]
    except KeyError:
        raise UnknownIdentity(identity) from None


def perturbed(identity: str, **changes) -> IdentitySpec:
    """Copy of a catalog entry with ``lhs`` and/or ``rhs`` swapped out."""
    return dataclasses.replace(get_identity(identity), **changes)


def _validate(spec: IdentitySpec, params: Mapping) -> None:
    if set(params) != set(spec.params):
        raise DomainError(f"{spec.id} expects parameters {spec.params}, got {sorted(params)}")
    for name, v in params.items():
        if not isinstance(v, int):
            raise DomainError(f"{name}={v!r} is not an integer")
        ok = {
            "n": v >= spec.n_min,
            "j": v >= 1,
            "s": v >= 1,
            "q": v >= 3 and v % 2 == 1,
            "sign": v in (1, -1),
        }[name]
        if not ok:
            raise DomainError(f"{spec.id}: {name}={v} outside the domain ({spec.domain})")


def evaluate_identity(identity, params: Optional[Mapping] = None, **kw):
    """Both sides of an identity at one parameter point, exactly."""
    spec = get_identity(identity)
    params = dict(params or {}, **kw)
    _validate(spec, params)
    return spec.lhs(**params), spec.rhs(**params)


@dataclass(frozen=True)
class Grid:
    """Parameter ranges; ``n_max=None`` means each identity's own default."""

    n_max: Optional[int] = None
    j_max: int = 6
    s_max: int = 6
    q_set: tuple = (3, 5, 7)
    n_min: Optional[int] = None

    def ranges(self, spec: IdentitySpec) -> dict[str, list[int]]:
        n_lo = spec.n_min if self.n_min is None else self.n_min
        n_hi = spec.default_n_max if self.n_max is None else self.n_max
        table = {
            "n": list(range(n_lo, n_hi + 1)),
            "j": list(range(1, self.j_max + 1)),
            "s": list(range(1, self.s_max + 1)),
            "q": sorted(self.q_set),
            "sign": [1, -1],
        }
        return {p: table[p] for p in spec.params}


def grid_points(spec: IdentitySpec, grid: Grid) -> Iterable[dict]:
    ranges = grid.ranges(spec)
    for combo in itertools.product(*ranges.values()):
        yield dict(zip(ranges, combo))


def _describe(ranges: Mapping[str, list]) -> dict:
    out = {}
    for name, values in ranges.items():
        if name in ("n", "j", "s") and values:
            out[name] = f"{values[0]}..{values[-1]}"
        else:
            out[name] = list(values)
    return out


def check_identity(identity, grid: Optional[Grid] = None) -> CheckResult:
    """Evaluate every grid point in lexicographic order; stop at the first failure."""
    spec = get_identity(identity)
    grid = grid or Grid()
    ranges = grid.ranges(spec)
    start = time.perf_counter()
    counterexample = None
    for params in grid_points(spec, grid):
        _validate(spec, params)
        lhs, rhs = spec.lhs(**params), spec.rhs(**params)
        if lhs != rhs:
            counterexample = {"params": params, "lhs": render(lhs), "rhs": render(rhs)}
            break
    millis = round((time.perf_counter() - start) * 1000, 3)
    status = "fail" if counterexample else "pass"
    return CheckResult(spec.id, _describe(ranges), status, counterexample, millis)
