"""Second moment of the argument of the Riemann zeta function.

The library evaluates the asymptotic prediction for the integral of
S(t)^2 up to a height T, computes the same quantity empirically from a
file of zero ordinates, and lines both up in a comparison table.
"""

from .formulas import (
    FormulaInputs,
    MomentReport,
    build_report,
    correction_integral,
    evaluate_goldston,
    evaluate_goldston_li,
    evaluate_short_interval,
    evaluate_theorem1,
    main_term_integral,
)
from .moment import MomentValue, QuadratureSpec, s_of_t, second_moment
from .primes import (
    euler_product_A,
    first_primes,
    lemma7_residual,
    log_euler_product_A,
    prime_constant_K,
    prime_sum_B,
    sieve_primes,
    von_mangoldt,
)
from .quadrature import adaptive_gauss, fixed_gauss, gauss_legendre
from .special import (
    EULER_GAMMA,
    STIELTJES,
    ThetaExpansion,
    logarithmic_integral,
    riemann_siegel_theta,
    zeta_pair_bracket,
    zeta_real,
)
from .zeros import (
    CoverageError,
    ZeroCatalog,
    ZeroFileEmptyError,
    ZeroFileError,
    ZeroFileFormatError,
    ZeroFileOrderError,
    ZeroFileParseError,
    ZeroFileValidationError,
    count_zeros_below,
    ingest_zeros,
    select_anchor,
    serialize_zeros,
)

__version__ = "0.1.0"

__all__ = [
    "CoverageError",
    "EULER_GAMMA",
    "FormulaInputs",
    "MomentReport",
    "MomentValue",
    "QuadratureSpec",
    "STIELTJES",
    "ThetaExpansion",
    "ZeroCatalog",
    "ZeroFileEmptyError",
    "ZeroFileError",
    "ZeroFileFormatError",
    "ZeroFileOrderError",
    "ZeroFileParseError",
    "ZeroFileValidationError",
    "adaptive_gauss",
    "build_report",
    "correction_integral",
    "count_zeros_below",
    "euler_product_A",
    "evaluate_goldston",
    "evaluate_goldston_li",
    "evaluate_short_interval",
    "evaluate_theorem1",
    "first_primes",
    "fixed_gauss",
    "gauss_legendre",
    "ingest_zeros",
    "lemma7_residual",
    "log_euler_product_A",
    "logarithmic_integral",
    "main_term_integral",
    "prime_constant_K",
    "prime_sum_B",
    "riemann_siegel_theta",
    "s_of_t",
    "second_moment",
    "select_anchor",
    "serialize_zeros",
    "sieve_primes",
    "von_mangoldt",
    "zeta_pair_bracket",
    "zeta_real",
    "__version__",
]
