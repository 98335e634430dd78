"""Exact Laplacian eigenvalue counting and domination on trees."""

from .domination import (
    DominationCertificate,
    alg2_dominating,
    alg3_dominating,
    bruteforce_dominating_set,
    gamma_bruteforce,
    gamma_dp,
    greedy_dominating,
    is_dominating,
)
from .inertia import (
    DiagonalizationResult,
    InertiaTriple,
    count_below,
    count_interval,
    diagonalize,
    inertia,
    localize_spectrum,
    mu,
    nu,
)
from .tree import RootedTree, Tree, classify, parse_tree, read_tree, root_at

__version__ = "0.1.0"

__all__ = [
    "DiagonalizationResult",
    "DominationCertificate",
    "InertiaTriple",
    "RootedTree",
    "Tree",
    "alg2_dominating",
    "alg3_dominating",
    "bruteforce_dominating_set",
    "classify",
    "count_below",
    "count_interval",
    "diagonalize",
    "gamma_bruteforce",
    "gamma_dp",
    "greedy_dominating",
    "inertia",
    "is_dominating",
    "localize_spectrum",
    "mu",
    "nu",
    "parse_tree",
    "read_tree",
    "root_at",
]
