"""Certified growth rates of sum closed permutation classes."""

from permgrowth._core import (
    AntichainSet,
    GrowthRate,
    Permutation,
    RealizationCertificate,
    SeqSpec,
    antichain_set,
    builtin_problem,
    choice_rate,
    class_counts,
    closure_counts,
    contains,
    direct_sum,
    enumerate_indecomposables,
    f_eval,
    growth_rate,
    inflate,
    interval_endpoints,
    is_simple,
    is_sum_indecomposable,
    juxtapose_rate,
    members_up_to,
    oscillation_sigma,
    proximity_bound,
    realize,
    run_paper_checks,
    seq_to_polynomial,
    standardize,
    sum_decompose,
    u_member,
    verify_antichain,
)

__version__ = "0.1.0"

__all__ = [
    "AntichainSet",
    "GrowthRate",
    "Permutation",
    "RealizationCertificate",
    "SeqSpec",
    "antichain_set",
    "builtin_problem",
    "choice_rate",
    "class_counts",
    "closure_counts",
    "contains",
    "direct_sum",
    "enumerate_indecomposables",
    "f_eval",
    "growth_rate",
    "inflate",
    "interval_endpoints",
    "is_simple",
    "is_sum_indecomposable",
    "juxtapose_rate",
    "members_up_to",
    "oscillation_sigma",
    "proximity_bound",
    "realize",
    "run_paper_checks",
    "seq_to_polynomial",
    "standardize",
    "sum_decompose",
    "u_member",
    "verify_antichain",
]
