"""Exact arithmetic for holomorphic eta quotients.

Cusp orders on congruence levels, Atkin-Lehner involutions, level-lowering
projections, composition of coprime-level quotients, a complete per-level
factorization search with an irreducibility verdict engine, explicit
least-factorization-level bounds, and an independent q-expansion oracle.
All arithmetic is exact (integers and rationals throughout).
"""

from .bounds import (
    BoundReport,
    PrimitiveLevelUnknown,
    factor_level_bound,
    quasi_weight_bound,
    primitive_level_bound,
    exponent_norm_bound,
    min_level_bound,
    doubling_product,
)
from .eta import ONE, EtaParseError, EtaQuotient, parse
from .factor import (
    DEFAULT_ENUM_BUDGET,
    EnumerationBudgetError,
    FactorizationWitness,
    IrreducibilityVerdict,
    IRREDUCIBLE,
    REDUCIBLE,
    UNKNOWN,
    all_factors_on,
    decide_irreducible,
    factorize_on,
    is_factor,
    min_factorization_level,
    quasi_irreducible,
    structured_factor_search,
)
from .numth import (
    ArithProfile,
    arith_profile,
    divisors,
    exact_divisors,
    gcexd,
    is_prime_power,
    odot,
    phihat,
    psi,
    rad,
)
from .orders import (
    NormalizedInverse,
    OrderMatrix,
    OrderVector,
    one_cusp_quotient,
    normalized_inverse,
    is_holomorphic,
    order_matrix,
    order_vector,
    weight_from_orders,
)
from .qoracle import QSeries, SeriesBudgetError, qexp, verify_identity
from .transforms import LoweredQuotient, atkin_lehner, compose, lower

__version__ = "0.1.0"

__all__ = [
    "ArithProfile",
    "BoundReport",
    "DEFAULT_ENUM_BUDGET",
    "EnumerationBudgetError",
    "EtaParseError",
    "EtaQuotient",
    "FactorizationWitness",
    "IRREDUCIBLE",
    "IrreducibilityVerdict",
    "LoweredQuotient",
    "PrimitiveLevelUnknown",
    "NormalizedInverse",
    "ONE",
    "OrderMatrix",
    "OrderVector",
    "QSeries",
    "REDUCIBLE",
    "SeriesBudgetError",
    "UNKNOWN",
    "all_factors_on",
    "arith_profile",
    "atkin_lehner",
    "one_cusp_quotient",
    "compose",
    "decide_irreducible",
    "divisors",
    "exact_divisors",
    "factor_level_bound",
    "factorize_on",
    "gcexd",
    "normalized_inverse",
    "is_factor",
    "is_holomorphic",
    "is_prime_power",
    "quasi_weight_bound",
    "lower",
    "primitive_level_bound",
    "min_factorization_level",
    "odot",
    "order_matrix",
    "order_vector",
    "parse",
    "phihat",
    "psi",
    "qexp",
    "quasi_irreducible",
    "exponent_norm_bound",
    "rad",
    "structured_factor_search",
    "min_level_bound",
    "doubling_product",
    "verify_identity",
    "weight_from_orders",
]
