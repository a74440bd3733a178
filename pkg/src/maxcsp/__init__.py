"""Uniform-sampling approximation for weighted MAX-CSP / MAX-k-SAT.

The library models weighted truth-table constraints, parses DIMACS
CNF/WCNF and a native CSP format, computes the counting bound on
near-optimal assignments that powers the sampling solver's iteration
budget, evaluates runtime exponents (including published comparison
baselines), and ships a brute-force oracle that verifies every inequality
at desk scale.
"""

from .bounds import (
    CountingBound,
    DeltaRecord,
    ExponentReport,
    ComparisonRow,
    PUBLISHED_EXPONENTS,
    binary_entropy,
    binomial_sum,
    counting_bound,
    exponent_ept,
    exponent_hirsch1,
    exponent_hirsch2,
    exponent_ours_csp,
    exponent_ours_eksat,
    exponent_ours_ksat_delta2,
    entropy_scaling_gap,
    log2_binomial_sum,
    comparison_table,
)
from .errors import (
    BudgetOverflowError,
    CspError,
    DimensionError,
    DomainError,
    FormatError,
    SizeError,
    UnsupportedError,
)
from .formats import (
    ParseDiagnostics,
    detect_format,
    parse,
    parse_cnf,
    parse_csp,
    parse_wcnf,
    serialize,
)
from .generate import random_csp, random_ekcnf, random_wcnf
from .instance import (
    Assignment,
    Constraint,
    CspInstance,
    clause_from_literals,
    clause_length_histogram,
    clause_literals,
    contribution,
    ksat_optimum_lower_bound,
    weight_of,
    weight_of_batch,
)
from .oracle import (
    EntropyScalingReport,
    VerificationReport,
    assignment_weights,
    brute_force_optimum,
    count_near_optimal,
    verify_entropy_scaling,
    verify_counting_bound,
)
from .sampler import SamplerConfig, SamplerResult, iteration_budget, solve, solve_ksat

__version__ = "0.1.0"

__all__ = [
    "Assignment",
    "BudgetOverflowError",
    "Constraint",
    "CountingBound",
    "CspError",
    "CspInstance",
    "DeltaRecord",
    "DimensionError",
    "DomainError",
    "ExponentReport",
    "FormatError",
    "EntropyScalingReport",
    "ParseDiagnostics",
    "SamplerConfig",
    "SamplerResult",
    "SizeError",
    "ComparisonRow",
    "PUBLISHED_EXPONENTS",
    "UnsupportedError",
    "VerificationReport",
    "assignment_weights",
    "binary_entropy",
    "binomial_sum",
    "brute_force_optimum",
    "clause_from_literals",
    "clause_length_histogram",
    "clause_literals",
    "contribution",
    "count_near_optimal",
    "counting_bound",
    "detect_format",
    "exponent_ept",
    "exponent_hirsch1",
    "exponent_hirsch2",
    "exponent_ours_csp",
    "exponent_ours_eksat",
    "exponent_ours_ksat_delta2",
    "iteration_budget",
    "ksat_optimum_lower_bound",
    "entropy_scaling_gap",
    "log2_binomial_sum",
    "parse",
    "parse_cnf",
    "parse_csp",
    "parse_wcnf",
    "random_csp",
    "random_ekcnf",
    "random_wcnf",
    "serialize",
    "solve",
    "solve_ksat",
    "comparison_table",
    "verify_entropy_scaling",
    "verify_counting_bound",
    "weight_of",
    "weight_of_batch",
]
