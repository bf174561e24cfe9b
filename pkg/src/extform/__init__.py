"""Exact extended-formulation toolkit: slack matrices, factorizations, reductions."""
from .core import (
    Guarantees,
    ProblemSpec,
    Sense,
    brute_force_optimum,
    eval_value,
    exact_guarantees,
    optimum_with_witness,
    proportional_guarantees,
    sound_instances,
)
from .errors import ExtFormError
from .factor import (
    LPFactorization,
    LPFormulation,
    SDPFactorization,
    factorization_from_formulation,
    farkas_certificate,
    formulation_from_factorization,
    verify_formulation,
    verify_lp_factorization,
    verify_sdp_factorization,
)
from .gadgets import GADGETS, GadgetResult
from .rank import Budget, RankInterval, lp_rank_bounds, nonneg_rank_bounds, rank_sandwich
from .reduce import Reduction, ReductionReport, matrix_reduction, simple_reduction, verify_reduction
from .rounding import bounded_factorization, round_to_problem
from .slack import SlackMatrix, build_slack

__all__ = [
    "Budget", "ExtFormError", "GADGETS", "GadgetResult", "Guarantees", "LPFactorization",
    "LPFormulation", "ProblemSpec", "RankInterval", "Reduction", "ReductionReport",
    "SDPFactorization", "Sense", "SlackMatrix", "bounded_factorization", "brute_force_optimum",
    "build_slack", "eval_value", "exact_guarantees", "factorization_from_formulation",
    "farkas_certificate", "formulation_from_factorization", "lp_rank_bounds",
    "matrix_reduction", "nonneg_rank_bounds", "optimum_with_witness", "proportional_guarantees",
    "rank_sandwich", "round_to_problem", "simple_reduction", "sound_instances",
    "verify_formulation", "verify_lp_factorization", "verify_reduction",
    "verify_sdp_factorization",
]
