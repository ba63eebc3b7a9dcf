"""Exact verification of Lucas-Euler and balancing-polynomial identities."""

__version__ = "0.1.0"

from .exact import QuadExt, Rational, binomial, quadext_inv, quadext_mul, quadext_pow  # noqa: E402
from .polyring import X, Poly, poly_eval_quadext, poly_eval_rational, poly_mul  # noqa: E402
from .sequences import (  # noqa: E402
    ALPHA,
    BETA,
    IMAG,
    LAMBDA,
    SQRT5,
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
from .egf import EgfSeries, build_gf, egf_mul, egf_recip  # noqa: E402
from .gfcheck import check_gf_equation, list_gf_equations  # noqa: E402
from .catalog import Grid, check_identity, evaluate_identity, list_identities  # noqa: E402
from .results import CheckResult, Report  # noqa: E402
