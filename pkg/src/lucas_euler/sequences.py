"""Fibonacci/Lucas numbers, (Lucas-)balancing polynomials, Bernoulli and Euler
numbers and polynomials.

All families are memoized in a :class:`SequenceCache`.  The module-level
functions use one shared default cache; build a private cache when working
from several threads.
"""
from __future__ import annotations

from fractions import Fraction

from .exact import QuadExt, binomial
from .polyring import X, Poly

__all__ = [
    "SequenceCache",
    "LAMBDA_D",
    "LAMBDA",
    "SQRT5",
    "ALPHA",
    "BETA",
    "IMAG",
    "fibonacci",
    "lucas",
    "balancing_poly",
    "lucas_balancing_poly",
    "lambda_power",
    "bernoulli_number",
    "euler_number",
    "bernoulli_poly",
    "euler_poly",
    "euler_at_zero",
    "golden_power",
    "default_cache",
]

# lambda(x) = 3x + sqrt(9x^2 - 1)
LAMBDA_D = 9 * X * X - 1
LAMBDA = QuadExt(3 * X, 1, LAMBDA_D)

SQRT5 = QuadExt(0, 1, 5)
ALPHA = QuadExt(Fraction(1, 2), Fraction(1, 2), 5)
BETA = QuadExt(Fraction(1, 2), Fraction(-1, 2), 5)
IMAG = QuadExt(0, 1, -1)


def _check_index(n: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"sequence index must be a non-negative integer, got {n!r}")


class SequenceCache:
    """Per-instance memo tables, filled on demand by forward recurrence."""

    def __init__(self):
        self._fib = [0, 1]
        self._luc = [2, 1]
        self._bal = [Poly(), Poly((1,))]
        self._lbal = [Poly((1,)), 3 * X]
        self._bern = [Fraction(1)]
        self._euler_even = [1]  # E_0, E_2, E_4, ...
        self._bern_poly: dict[int, Poly] = {}
        self._euler_poly: dict[int, Poly] = {}

    def fibonacci(self, n: int) -> int:
        _check_index(n)
        f = self._fib
        while len(f) <= n:
            f.append(f[-1] + f[-2])
        return f[n]

    def lucas(self, n: int) -> int:
        _check_index(n)
        v = self._luc
        while len(v) <= n:
            v.append(v[-1] + v[-2])
        return v[n]

    def _poly_recurrence(self, table: list, n: int) -> Poly:
        six_x = 6 * X
        while len(table) <= n:
            table.append(six_x * table[-1] - table[-2])
        return table[n]

    def balancing_poly(self, n: int) -> Poly:
        _check_index(n)
        return self._poly_recurrence(self._bal, n)

    def lucas_balancing_poly(self, n: int) -> Poly:
        _check_index(n)
        return self._poly_recurrence(self._lbal, n)

    def bernoulli_number(self, n: int) -> Fraction:
        _check_index(n)
        b = self._bern
        while len(b) <= n:
            m = len(b)
            # sum_{k=0}^{m} C(m+1, k) B_k = 0
            s = sum(binomial(m + 1, k) * b[k] for k in range(m))
            b.append(-Fraction(s) / (m + 1))
        return b[n]

    def euler_number(self, n: int) -> int:
        _check_index(n)
        if n % 2:
            return 0
        e = self._euler_even
        while len(e) <= n // 2:
            m = len(e)
            # sum_{k=0}^{m} C(2m, 2k) E_{2k} = 0
            e.append(-sum(binomial(2 * m, 2 * k) * e[k] for k in range(m)))
        return e[n // 2]

    def bernoulli_poly(self, n: int) -> Poly:
        _check_index(n)
        if n not in self._bern_poly:
            coeffs = [binomial(n, k) * self.bernoulli_number(k) for k in range(n + 1)]
            # C(n,k) B_k multiplies x^(n-k)
            self._bern_poly[n] = Poly(reversed(coeffs))
        return self._bern_poly[n]

    def euler_poly(self, n: int) -> Poly:
        _check_index(n)
        if n not in self._euler_poly:
            shifted = X - Fraction(1, 2)
            p = Poly()
            for k in range(0, n + 1, 2):
                p = p + Fraction(binomial(n, k) * self.euler_number(k), 2**k) * shifted ** (n - k)
            self._euler_poly[n] = p
        return self._euler_poly[n]

    def euler_at_zero(self, n: int) -> Fraction:
        """E_n(0) = 2 (1 - 2^(n+1)) B_(n+1) / (n+1)."""
        _check_index(n)
        return Fraction(2 * (1 - 2 ** (n + 1)), n + 1) * self.bernoulli_number(n + 1)

    def lambda_power(self, n: int) -> QuadExt:
        _check_index(n)
        return LAMBDA ** n

    def golden_power(self, n: int, sign: int = 1) -> QuadExt:
        """alpha^n (sign=+1) or beta^n (sign=-1) as (L_n + sign F_n sqrt5)/2."""
        _check_index(n)
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        return QuadExt(Fraction(self.lucas(n), 2), Fraction(sign * self.fibonacci(n), 2), 5)


default_cache = SequenceCache()

fibonacci = default_cache.fibonacci
lucas = default_cache.lucas
balancing_poly = default_cache.balancing_poly
lucas_balancing_poly = default_cache.lucas_balancing_poly
lambda_power = default_cache.lambda_power
bernoulli_number = default_cache.bernoulli_number
euler_number = default_cache.euler_number
bernoulli_poly = default_cache.bernoulli_poly
euler_poly = default_cache.euler_poly
euler_at_zero = default_cache.euler_at_zero
golden_power = default_cache.golden_power
