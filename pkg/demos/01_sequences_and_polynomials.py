"""
Sequences, polynomials and the lambda decomposition
===================================================

Exact Fibonacci/Lucas numbers, Bernoulli and Euler numbers, and the
balancing polynomial families.
"""

from fractions import Fraction

from lucas_euler import (
    LAMBDA,
    balancing_poly,
    bernoulli_number,
    euler_number,
    euler_poly,
    fibonacci,
    lucas,
    lucas_balancing_poly,
)

print("F_n:", [fibonacci(n) for n in range(12)])
print("L_n:", [lucas(n) for n in range(12)])

# B_1 = -1/2 in this convention
print("B_n:", [str(bernoulli_number(n)) for n in range(9)])
print("E_n:", [euler_number(n) for n in range(11)])

# E_n(x) evaluates at rationals exactly
print("E_3(x) =", euler_poly(3))
print("2^4 E_4(1/2) =", 2**4 * euler_poly(4)(Fraction(1, 2)))

# %%
# Balancing polynomials evaluated at x = 1 give the balancing numbers.
for n in range(5):
    print(f"B*_{n}(x) = {balancing_poly(n)}    C_{n}(x) = {lucas_balancing_poly(n)}")
print("B*_n(1):", [int(balancing_poly(n)(1)) for n in range(8)])
print("C_n(1): ", [int(lucas_balancing_poly(n)(1)) for n in range(8)])

# %%
# lambda^n splits into C_n + B*_n sqrt(9x^2 - 1).
lam4 = LAMBDA**4
print("lambda^4 =", lam4)
assert lam4.a == lucas_balancing_poly(4) and lam4.b == balancing_poly(4)
print("norm(lambda) =", LAMBDA.norm())
