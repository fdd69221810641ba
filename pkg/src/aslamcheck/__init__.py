"""Exact perfect-matching counting and a mechanical replay of the VMPSet reduction's overcount."""

from aslamcheck.gengraph import (
    GeneratingGraph,
    GNode,
    build_gamma,
    build_generating_graph,
    e_of,
    enumerate_cvmps,
    ep_of,
    er_of,
    is_cvmp,
    path_to_permutation,
    psi,
    se_of,
)
from aslamcheck.harness import (
    DiscrepancyReport,
    FuzzConfig,
    build_bg_prime,
    check_surplus_cardinalities,
    count_se_classes,
    fuzz,
    reproduce_counterexample,
)
from aslamcheck.matching import (
    BipartiteGraph,
    Edge,
    Matching,
    Permutation,
    Transposition,
    compose_transpositions,
    decompose,
    is_perfect_matching,
    matching_from_permutation,
)
from aslamcheck.oracles import count_ryser, count_subset_dp, enumerate_perfect_matchings
from aslamcheck.reduction import VMPSet, init_ptm, run_aslam, vmpset_add, vmpset_multiply

__all__ = [
    "BipartiteGraph", "DiscrepancyReport", "Edge", "FuzzConfig", "GNode", "GeneratingGraph",
    "Matching", "Permutation", "Transposition", "VMPSet", "build_bg_prime", "build_gamma",
    "build_generating_graph", "check_surplus_cardinalities", "compose_transpositions", "count_ryser",
    "count_se_classes", "count_subset_dp", "decompose", "e_of", "enumerate_cvmps",
    "enumerate_perfect_matchings", "ep_of", "er_of", "fuzz", "init_ptm", "is_cvmp",
    "is_perfect_matching", "matching_from_permutation", "path_to_permutation", "psi",
    "reproduce_counterexample", "run_aslam", "se_of", "vmpset_add", "vmpset_multiply",
]
