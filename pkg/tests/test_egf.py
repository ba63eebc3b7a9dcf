from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from lucas_euler.egf import (
    POLY,
    POLYQUAD_LAMBDA,
    QUAD5,
    RATIONAL,
    EgfSeries,
    RingMismatch,
    build_gf,
    egf_cosh_linear,
    egf_exp_linear,
    egf_from_function,
    egf_mul,
    egf_recip,
    egf_sinh_linear,
)
from lucas_euler.exact import NotInvertible, QuadExt
from lucas_euler.gfcheck import GF_EQUATIONS, check_gf_equation, list_gf_equations
from lucas_euler.polyring import X
from lucas_euler.sequences import (
    LAMBDA_D,
    balancing_poly,
    bernoulli_number,
    euler_number,
    lucas_balancing_poly,
)


def one(order, ring=RATIONAL):
    return egf_exp_linear(0, order, ring)


def ordinary_division(num, den):
    """Ordinary power-series quotient num/den, both given as lists."""
    q = []
    for n in range(len(num)):
        s = num[n] - sum(den[k] * q[n - k] for k in range(1, n + 1))
        q.append(s / den[0])
    return q


def test_exp_additivity():
    c1, c2 = Fraction(2, 3), Fraction(-5, 7)
    assert egf_mul(egf_exp_linear(c1, 8), egf_exp_linear(c2, 8)) == egf_exp_linear(c1 + c2, 8)


def test_exp_additivity_in_extension():
    y = QuadExt(0, 1, 5)
    lhs = egf_exp_linear(1 + y, 8, QUAD5) * egf_exp_linear(3 - 2 * y, 8, QUAD5)
    assert lhs == egf_exp_linear(4 - y, 8, QUAD5)


def test_multiplicative_identity():
    f = egf_from_function(lambda n: Fraction(n * n + 1, n + 2), 10, RATIONAL)
    assert f * one(10) == f


def test_cosh_times_sech_by_series_division():
    N = 12
    cosh_ordinary = [Fraction(1, factorial(n)) if n % 2 == 0 else Fraction(0) for n in range(N + 1)]
    sech_ordinary = ordinary_division([Fraction(int(n == 0)) for n in range(N + 1)], cosh_ordinary)
    sech = EgfSeries(tuple(c * factorial(n) for n, c in enumerate(sech_ordinary)), RATIONAL)
    assert egf_cosh_linear(1, N).recip() == sech
    assert egf_cosh_linear(1, N) * sech == one(N)


def test_hyperbolic_identities():
    for c in (Fraction(3, 2), QuadExt(Fraction(1, 2), Fraction(1, 2), 5)):
        ring = QUAD5 if isinstance(c, QuadExt) else RATIONAL
        ch, sh = egf_cosh_linear(c, 10, ring), egf_sinh_linear(c, 10, ring)
        assert ch + sh == egf_exp_linear(c, 10, ring)
        assert ch * ch - sh * sh == one(10, ring)


def test_exp_of_zero():
    assert egf_exp_linear(0, 5).coeffs == (1, 0, 0, 0, 0, 0)


def test_recip_examples():
    assert egf_recip(one(6)) == one(6)
    sech = egf_cosh_linear(1, 20).recip()
    assert [sech[n] for n in range(21)] == [euler_number(n) for n in range(21)]
    kernel = egf_from_function(lambda n: Fraction(1, n + 1), 20, RATIONAL)
    assert [kernel.recip()[n] for n in range(21)] == [bernoulli_number(n) for n in range(21)]


def test_recip_needs_unit():
    with pytest.raises(NotInvertible):
        egf_exp_linear(1, 4).__sub__(1).recip()
    f = egf_from_function(lambda n: X if n == 0 else 1, 4, POLY)
    with pytest.raises(NotInvertible):
        f.recip()


def test_mismatch_errors():
    with pytest.raises(RingMismatch):
        egf_exp_linear(1, 4) * egf_exp_linear(1, 5)
    with pytest.raises(RingMismatch):
        egf_exp_linear(1, 4) + egf_exp_linear(1, 4, POLY)


def test_product_is_binomial_convolution():
    f = egf_from_function(lambda n: Fraction(n + 1), 6, RATIONAL)
    g = egf_from_function(lambda n: Fraction(1, n + 1), 6, RATIONAL)
    h = f * g
    for n in range(7):
        assert h[n] == sum(comb(n, k) * f[k] * g[n - k] for k in range(n + 1))


@given(
    st.lists(st.fractions(min_value=-6, max_value=6, max_denominator=5), min_size=2, max_size=10),
    st.fractions(min_value=1, max_value=4, max_denominator=3),
)
def test_double_reciprocal(tail, a0):
    f = EgfSeries(tuple([a0] + tail), RATIONAL)
    assert f.recip().recip() == f
    assert f * f.recip() == one(f.order)


def test_build_c2_constant_term():
    assert build_gf("c2", 8)[0] == 1


def test_build_b2_coefficients():
    b2 = build_gf("b2", 8)
    for n in range(9):
        assert b2[n] == POLYQUAD_LAMBDA(balancing_poly(2 * n))


def test_build_i_half_point_gives_euler_numbers():
    f = build_gf("I", 10, x=Fraction(1, 2), scale=2)
    assert [f[n] for n in range(11)] == [euler_number(n) for n in range(11)]


@pytest.mark.parametrize("name,index,family", [
    ("b1", 1, balancing_poly),
    ("b2", 0, balancing_poly),
    ("c1", 1, lucas_balancing_poly),
    ("c2", 0, lucas_balancing_poly),
])
def test_definitional_series(name, index, family):
    f = build_gf(name, 12)
    assert [f[n] for n in range(13)] == [POLYQUAD_LAMBDA(family(2 * n + index)) for n in range(13)]


def test_build_unknown_name():
    with pytest.raises(KeyError):
        build_gf("Z", 4)


def test_scale_argument():
    f = egf_exp_linear(1, 6).scale_argument(Fraction(3))
    assert f == egf_exp_linear(3, 6)


@pytest.mark.parametrize("eq_id", ["thm2", "thm4"])
def test_theorem_equations_pass_at_12(eq_id):
    assert check_gf_equation(eq_id, 12).passed


def test_perturbed_c2_fails_at_order_1():
    c2 = build_gf("c2", 4)
    bad = c2.with_coefficient(1, 0)
    result = check_gf_equation("thm2", 4, overrides={"c2": bad})
    assert result.status == "fail"
    assert result.counterexample["order"] == 1


def test_equation_registry():
    theorems = [e.id for e in list_gf_equations("theorem")]
    assert theorems == ["thm1_tanh", "thm1_chain", "thm2", "thm3_tanh", "thm3", "thm4", "thm5"]
    assert len(list_gf_equations("definition")) >= 4
    with pytest.raises(KeyError):
        check_gf_equation("nosuch")


def test_all_definition_equations_pass():
    for eq in list_gf_equations("definition"):
        assert check_gf_equation(eq.id).passed, eq.id


def test_symbolic_ring_uses_lambda_discriminant():
    assert POLYQUAD_LAMBDA.d == LAMBDA_D
    assert set(GF_EQUATIONS) >= {"genf_b1", "genf_b2", "genf_c1", "genf_c2"}
