"""Closed-form approximations of the integral of cos(cos(x)).

The integrand has no elementary antiderivative; this package provides two
closed-form approximations of it (constant-time definite integrals with a
width-independent error bound), the reference quadrature used to verify
them, and a benchmark harness comparing accuracy and cost.
"""

from .analysis import (
    DEFAULT_BENCHMARK_BOUNDS,
    BenchmarkRow,
    analytic_error_bound,
    best_case_error,
    definite_integral,
    run_benchmark,
    verify_identity_eq1,
    worst_case_error,
)
from .approx import (
    MethodKind,
    SampleRow,
    c1,
    c2,
    k_of_x,
    l_linear,
    p_tilde,
    p_tilde_prime,
    sample_functions,
    scaled_antiderivative,
)
from .quadrature import (
    ConvergenceError,
    Interval,
    QuadratureResult,
    adaptive_simpson,
    cos_cos,
    periodic_oracle,
)
from .special import ApproxConstants, bessel_j0, derive_constants

__version__ = "0.1.0"

__all__ = [
    "ApproxConstants",
    "BenchmarkRow",
    "ConvergenceError",
    "DEFAULT_BENCHMARK_BOUNDS",
    "Interval",
    "MethodKind",
    "QuadratureResult",
    "SampleRow",
    "adaptive_simpson",
    "analytic_error_bound",
    "bessel_j0",
    "best_case_error",
    "c1",
    "c2",
    "cos_cos",
    "definite_integral",
    "derive_constants",
    "k_of_x",
    "l_linear",
    "p_tilde",
    "p_tilde_prime",
    "periodic_oracle",
    "run_benchmark",
    "sample_functions",
    "scaled_antiderivative",
    "verify_identity_eq1",
    "worst_case_error",
]
