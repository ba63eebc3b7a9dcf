"""
Truncated exponential generating functions
==========================================

EGF arithmetic on coefficient sequences: binomial-convolution products,
reciprocals, and the theorem-level series equations.
"""

from fractions import Fraction

from lucas_euler import check_gf_equation, list_gf_equations
from lucas_euler.egf import RATIONAL, build_gf, egf_cosh_linear, egf_from_function

# sech z has the Euler numbers as coefficients of z^n/n!
sech = egf_cosh_linear(1, 12).recip()
print("sech:", [int(sech[n]) for n in range(13)])

# z/(e^z - 1) is the reciprocal of sum z^n/(n+1)!
kernel = egf_from_function(lambda n: Fraction(1, n + 1), 10, RATIONAL)
print("z/(e^z-1):", [str(kernel.recip()[n]) for n in range(11)])

# %%
# The series for C_2n(x) lives over Q[x][sqrt(9x^2 - 1)].
c2 = build_gf("c2", 3)
for n in range(4):
    print(f"c2[{n}] = {c2[n]}")

# %%
# Every registered equation, checked at its default order.
for eq in list_gf_equations():
    result = check_gf_equation(eq.id)
    print(f"{result.status.upper():4}  {eq.id:11} {eq.statement}")

# %%
# Dropping one coefficient breaks the match at that order.
c2 = build_gf("c2", 8)
bad = check_gf_equation("thm2", 8, overrides={"c2": c2.with_coefficient(1, 0)})
print(bad.status, bad.counterexample["order"])
