import random
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from lucas_euler.exact import (
    DiscriminantMismatch,
    NotInvertible,
    QuadExt,
    binomial,
    quadext_inv,
    quadext_mul,
    quadext_pow,
    sqrt_power,
)
from lucas_euler.polyring import X, Poly


def _conv(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        for j, v in enumerate(b):
            out[i + j] += u * v
    return out


def test_binomial_examples():
    assert binomial(5, 2) == 10
    assert binomial(3, -1) == 0
    assert binomial(3, 4) == 0
    assert binomial(0, 0) == 1
    assert binomial(40, 20) == factorial(40) // (factorial(20) * factorial(20))


def test_binomial_rejects_negative_n():
    with pytest.raises(ValueError):
        binomial(-1, 0)


ALPHA = QuadExt(Fraction(1, 2), Fraction(1, 2), 5)
BETA = QuadExt(Fraction(1, 2), Fraction(-1, 2), 5)
LAM = QuadExt(3 * X, 1, 9 * X * X - 1)


def test_root_squares_to_d():
    y = QuadExt(0, 1, 5)
    assert quadext_mul(y, y) == QuadExt(5, 0, 5)


def test_alpha_beta_product():
    assert ALPHA * BETA == -1


def test_lambda_norm_is_one():
    # (3x)^2 - (9x^2 - 1), expanded by plain coefficient lists
    norm = [c1 - c2 for c1, c2 in zip(_conv([0, 3], [0, 3]), [-1, 0, 9])]
    assert norm == [1, 0, 0]
    assert LAM * LAM.conj() == 1
    assert LAM.norm() == 1


def test_pow_examples():
    assert quadext_pow(ALPHA, 0) == 1
    assert quadext_pow(ALPHA, 2) == QuadExt(Fraction(3, 2), Fraction(1, 2), 5)


def test_lambda_cube_matches_recurrence():
    # w_n = 6x w_(n-1) - w_(n-2), coefficients as plain lists
    def rec(w0, w1, n):
        ws = [w0, w1]
        while len(ws) <= n:
            a = _conv([0, 6], ws[-1])
            b = ws[-2] + [0] * (len(a) - len(ws[-2]))
            ws.append([u - v for u, v in zip(a, b)])
        return ws[n]

    cube = quadext_pow(LAM, 3)
    assert cube.a == Poly(rec([1], [0, 3], 3))
    assert cube.b == Poly(rec([0], [1], 3))
    assert cube.a == 108 * X**3 - 9 * X


def test_inverse_examples():
    assert quadext_inv(LAM) == LAM.conj()
    assert quadext_inv(ALPHA) == -BETA
    one = QuadExt(1, 0, 5)
    assert quadext_inv(one) == one


def test_inverse_errors():
    with pytest.raises(NotInvertible):
        QuadExt(0, 0, 5).inverse()
    with pytest.raises(NotInvertible):
        QuadExt(0, 1, 9 * X * X - 1).inverse()


def test_discriminant_mismatch():
    with pytest.raises(DiscriminantMismatch):
        QuadExt(1, 1, 5) * QuadExt(1, 1, -1)
    with pytest.raises(DiscriminantMismatch):
        QuadExt(1, 1, 5) + QuadExt(1, 1, 2)


def test_div_root():
    y = QuadExt(0, 1, 5)
    assert (3 * y).div_root() == 3
    with pytest.raises(NotInvertible):
        (1 + y).div_root()


def test_sqrt_power_negative_exponents():
    assert sqrt_power(5, 2) == 5
    assert sqrt_power(5, -2) == Fraction(1, 5)
    assert sqrt_power(5, -1) == QuadExt(0, Fraction(1, 5), 5)
    assert sqrt_power(5, -3) * sqrt_power(5, 3) == 1


def test_immutable():
    with pytest.raises(AttributeError):
        ALPHA.a = 3


def test_rendering():
    assert str(QuadExt(Fraction(1, 2), Fraction(-3, 4), 5)) == "1/2 + (-3/4)*sqrt(5)"
    assert "sqrt(-1 + 9*x^2)" in str(LAM)


def test_rational_round_trip():
    rng = random.Random(20261016)
    for _ in range(1000):
        a = Fraction(rng.randint(-50, 50), rng.randint(1, 50))
        b = Fraction(rng.randint(-50, 50), rng.randint(1, 50))
        assert (a + b) - b == a
        assert a.denominator > 0


small = st.fractions(min_value=-20, max_value=20, max_denominator=12)
discriminants = st.sampled_from([5, -1, 2, 3, Fraction(1, 3)])


@st.composite
def quad_pairs(draw):
    d = draw(discriminants)
    return QuadExt(draw(small), draw(small), d), QuadExt(draw(small), draw(small), d)


small_poly = st.lists(st.integers(-5, 5), max_size=4).map(Poly)


@st.composite
def polyquad_pairs(draw):
    d = 9 * X * X - 1
    return QuadExt(draw(small_poly), draw(small_poly), d), QuadExt(draw(small_poly), draw(small_poly), d)


@given(st.one_of(quad_pairs(), polyquad_pairs()))
def test_norm_is_multiplicative(pair):
    u, v = pair
    assert (u * v).norm() == u.norm() * v.norm()


@given(st.one_of(quad_pairs(), polyquad_pairs()))
def test_conjugation(pair):
    u, v = pair
    assert (u * v).conj() == u.conj() * v.conj()
    assert u.conj().conj() == u


@settings(max_examples=50)
@given(quad_pairs(), st.integers(0, 16), st.integers(0, 16))
def test_power_additivity(pair, m, n):
    u, _ = pair
    assert quadext_pow(u, m + n) == quadext_pow(u, m) * quadext_pow(u, n)


@given(quad_pairs())
def test_inverse_property(pair):
    u, _ = pair
    if u.norm() != 0:
        assert u * u.inverse() == 1
