"""Numerical toolkit around the inverse logarithmic integral and the prime
zeta function: exact Taylor-coefficient polynomials for li_inverse, segmented
sieve ground truth, prime-zeta/Riemann-zeta identity verification, and
error-series experiments comparing li_inverse(n) with the n-th prime.
"""

from .backend import BACKEND_NAME, HAVE_COMPILED
from .errors import (
    CapacityError,
    ConvergenceError,
    DegenerateFitError,
    DivergenceWarning,
    DomainError,
    LiprimeError,
    NearSingularWarning,
    NearZeroError,
    PoleError,
    StepTooLargeError,
    TailTooLargeError,
)
from .special_fn import (
    QuadratureConfig,
    exp_integral_e1,
    li,
    li_inverse,
    zeta,
    zeta_log_deriv,
)
from .polyrec import (
    IntPolynomial,
    TaylorAnchor,
    gen_function_l,
    nth_prime_approx,
    pde_residual,
    pn_polynomials,
    taylor_step,
)
from .primes import (
    MobiusTable,
    PrimeTable,
    cached_sieve,
    mobius_table,
    nth_prime,
    pi,
    sieve,
)
from .prime_zeta import (
    TruncationPolicy,
    cross_method_identity,
    euler_log_deriv_sum,
    half_plane_difference,
    mobius_inversion_identity,
    odd_k_identity,
    prime_zeta_deriv_direct,
    prime_zeta_deriv_mobius,
    prime_zeta_direct,
    prime_zeta_mobius,
    product_identity,
    tilde_log_deriv_series,
    tilde_zeta,
)
from .analysis import (
    ErrorRow,
    approx_error_table,
    comparison_series,
    error_series_partial,
    exponent_fit,
    fit_error_exponent,
    integral_identity_check,
    integral_vs_sum,
)
from .reports import IdentityReport, SeriesResult

__version__ = "0.1.0"

__all__ = [
    "BACKEND_NAME",
    "HAVE_COMPILED",
    "CapacityError",
    "ConvergenceError",
    "DegenerateFitError",
    "DivergenceWarning",
    "DomainError",
    "LiprimeError",
    "NearSingularWarning",
    "NearZeroError",
    "PoleError",
    "StepTooLargeError",
    "TailTooLargeError",
    "QuadratureConfig",
    "exp_integral_e1",
    "li",
    "li_inverse",
    "zeta",
    "zeta_log_deriv",
    "IntPolynomial",
    "TaylorAnchor",
    "gen_function_l",
    "nth_prime_approx",
    "pde_residual",
    "pn_polynomials",
    "taylor_step",
    "MobiusTable",
    "PrimeTable",
    "cached_sieve",
    "mobius_table",
    "nth_prime",
    "pi",
    "sieve",
    "TruncationPolicy",
    "cross_method_identity",
    "euler_log_deriv_sum",
    "half_plane_difference",
    "mobius_inversion_identity",
    "odd_k_identity",
    "prime_zeta_deriv_direct",
    "prime_zeta_deriv_mobius",
    "prime_zeta_direct",
    "prime_zeta_mobius",
    "product_identity",
    "tilde_log_deriv_series",
    "tilde_zeta",
    "ErrorRow",
    "approx_error_table",
    "comparison_series",
    "error_series_partial",
    "exponent_fit",
    "fit_error_exponent",
    "integral_identity_check",
    "integral_vs_sum",
    "IdentityReport",
    "SeriesResult",
    "__version__",
]
