"""Sequence families against recurrence unrolling and sympy as independent oracles."""
from fractions import Fraction

import pytest
import sympy

from lucas_euler.exact import QuadExt
from lucas_euler.polyring import X, Poly
from lucas_euler.sequences import (
    SequenceCache,
    balancing_poly,
    bernoulli_number,
    bernoulli_poly,
    euler_at_zero,
    euler_number,
    euler_poly,
    fibonacci,
    golden_power,
    lambda_power,
    lucas,
    lucas_balancing_poly,
)

xs = sympy.Symbol("x")


def to_poly(expr) -> Poly:
    coeffs = sympy.Poly(sympy.expand(expr), xs).all_coeffs()[::-1]
    return Poly(Fraction(int(c.p), int(c.q)) for c in coeffs)


def sech_coefficients(order):
    """EGF coefficients of 1/cosh z by ordinary power-series division."""
    cosh = [Fraction(1, sympy.factorial(n)) if n % 2 == 0 else Fraction(0) for n in range(order + 1)]
    inv = []
    for n in range(order + 1):
        s = Fraction(int(n == 0)) - sum(cosh[k] * inv[n - k] for k in range(1, n + 1))
        inv.append(s / cosh[0])
    return [inv[n] * sympy.factorial(n) for n in range(order + 1)]


def test_fibonacci_lucas_initials():
    assert fibonacci(0) == 0 and fibonacci(1) == 1
    assert lucas(0) == 2 and lucas(1) == 1


def test_fibonacci_10_by_unrolling():
    a, b = 0, 1
    for _ in range(10):
        a, b = b, a + b
    assert fibonacci(10) == a == 55


def test_against_sympy_fibonacci_lucas():
    for n in range(60):
        assert fibonacci(n) == sympy.fibonacci(n)
        assert lucas(n) == sympy.lucas(n)


@pytest.mark.parametrize("fn", [fibonacci, lucas, balancing_poly, bernoulli_number, euler_number, euler_poly])
def test_negative_index_rejected(fn):
    with pytest.raises(ValueError):
        fn(-1)


def test_fibonacci_lucas_relations():
    for n in range(31):
        F, L = fibonacci(n), lucas(n)
        assert L * L - 5 * F * F == 4 * (-1) ** n
        assert L * L - lucas(2 * n) == 2 * (-1) ** n
        assert fibonacci(2 * n) == F * L
        if n >= 1:
            assert 5 * F == lucas(n + 1) + lucas(n - 1)


def test_balancing_examples():
    assert balancing_poly(0) == 0
    assert balancing_poly(1) == 1
    assert lucas_balancing_poly(0) == 1
    assert lucas_balancing_poly(1) == 3 * X
    assert balancing_poly(2) == 6 * X
    assert lucas_balancing_poly(2) == 18 * X * X - 1
    assert balancing_poly(4) == 216 * X**3 - 12 * X


def test_balancing_against_chebyshev():
    # B*_n(x) = U_(n-1)(3x), C_n(x) = T_n(3x)
    for n in range(1, 25):
        assert balancing_poly(n) == to_poly(sympy.chebyshevu(n - 1, 3 * xs))
        assert lucas_balancing_poly(n) == to_poly(sympy.chebyshevt(n, 3 * xs))


def test_lambda_power_examples():
    assert lambda_power(0) == 1
    assert lambda_power(1) == QuadExt(3 * X, 1, 9 * X * X - 1)
    p5 = lambda_power(5)
    assert (p5.a, p5.b) == (lucas_balancing_poly(5), balancing_poly(5))


def test_lambda_decomposition_to_40():
    for n in range(41):
        p = lambda_power(n)
        assert p.a == lucas_balancing_poly(n)
        assert p.b == balancing_poly(n)


def test_bernoulli_examples():
    assert bernoulli_number(0) == 1
    assert bernoulli_number(1) == Fraction(-1, 2)
    assert bernoulli_number(2) == Fraction(1, 6)
    assert bernoulli_number(4) == Fraction(-1, 30)
    assert bernoulli_number(7) == 0
    assert bernoulli_number(12) == Fraction(-691, 2730)


def test_bernoulli_against_sympy():
    for n in range(2, 41):
        b = sympy.bernoulli(n)
        assert bernoulli_number(n) == Fraction(int(b.p), int(b.q))


def test_odd_bernoulli_vanish():
    assert all(bernoulli_number(2 * n + 1) == 0 for n in range(1, 20))


def test_euler_examples():
    assert [euler_number(n) for n in (0, 2, 4)] == [1, -1, 5]
    assert euler_number(5) == 0
    assert euler_number(10) == -50521


def test_euler_against_sech_series_and_sympy():
    sech = sech_coefficients(30)
    for n in range(31):
        assert euler_number(n) == sech[n] == sympy.euler(n)
    # odd indices vanish in the series itself, not only by short-circuit
    assert all(sech[2 * n + 1] == 0 for n in range(15))


def test_polynomial_examples():
    assert euler_poly(1) == X - Fraction(1, 2)
    assert bernoulli_poly(0) == 1


def test_polynomials_against_sympy():
    for n in range(16):
        assert bernoulli_poly(n) == to_poly(sympy.bernoulli(n, xs))
        assert euler_poly(n) == to_poly(sympy.euler(n, xs))


def test_euler_reflection():
    for n in range(13):
        assert euler_poly(n)(1 - X) == (-1) ** n * euler_poly(n)


def test_euler_number_half_point():
    for n in range(31):
        assert euler_number(n) == 2**n * euler_poly(n)(Fraction(1, 2))


def test_euler_at_zero():
    assert euler_at_zero(0) == 1
    assert euler_at_zero(1) == Fraction(-1, 2)
    assert euler_at_zero(2) == 0
    for n in range(31):
        assert euler_at_zero(n) == euler_poly(n)(0)


def test_golden_power():
    assert golden_power(0) == 1
    assert golden_power(1) == QuadExt(Fraction(1, 2), Fraction(1, 2), 5)
    assert golden_power(7) == QuadExt(Fraction(29, 2), Fraction(13, 2), 5)
    alpha = golden_power(1)
    for n in range(31):
        assert golden_power(n, 1) * golden_power(n, -1) == (-1) ** n
        assert golden_power(n) == alpha**n


def test_cache_transparency():
    warm = SequenceCache()
    warm.euler_poly(20)
    warm.balancing_poly(30)
    for n in range(0, 21, 3):
        fresh = SequenceCache()
        assert fresh.euler_poly(n) == warm.euler_poly(n)
        assert fresh.balancing_poly(n) == warm.balancing_poly(n)
        assert fresh.bernoulli_number(n) == bernoulli_number(n)
