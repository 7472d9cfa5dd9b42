"""Edge deletion under lambda-edge-connectivity: structural solvers, an exhaustive oracle and a CLI."""

from .chain import CutChain, WitnessSet, build_chain, uncross_pair, witness_edges
from .classify import Classification, classify_edges, newly_undeletable
from .directed import extract_from_big_D, greedy_maximal, solve_directed
from .estimator import EdgeDeletionSparsifier, check_graph
from .even import solve_even
from .exceptions import (
    BudgetExceededError,
    DomainError,
    ECSError,
    GenerationError,
    InsufficientWitnessesError,
    InternalInconsistencyError,
    ParseError,
    PreconditionError,
)
from .flow import PathSystem, edge_connectivity, is_lambda_connected, max_flow, min_cut_side
from .generators import gen_blob_cycle, gen_ham_union
from .graph import Cut, Graph, crossing_edges, cut_size, submodularity_check
from .io import emit, parse
from .odd import (
    CyclePartition,
    ViolatingTriple,
    assemble_cycle_partition,
    build_odd_setup,
    find_violating_triple,
    mark_irrelevant,
    solve_odd,
    solve_odd_step,
)
from .oracle import oracle_max_deletion, oracle_max_weight, oracle_reachability_equivalent
from .outcomes import BoundCertificate, DeletionSet, NewIrrelevant
from .pipeline import find_deletion_set, minimum_equivalent_digraph
from .weighted import WeightedSolution, heaviest_candidates, solve_weighted

__all__ = [
    "assemble_cycle_partition",
    "BoundCertificate",
    "BudgetExceededError",
    "build_chain",
    "build_odd_setup",
    "check_graph",
    "Classification",
    "classify_edges",
    "crossing_edges",
    "Cut",
    "cut_size",
    "CutChain",
    "CyclePartition",
    "DeletionSet",
    "DomainError",
    "ECSError",
    "edge_connectivity",
    "EdgeDeletionSparsifier",
    "emit",
    "extract_from_big_D",
    "find_deletion_set",
    "find_violating_triple",
    "gen_blob_cycle",
    "gen_ham_union",
    "GenerationError",
    "Graph",
    "greedy_maximal",
    "heaviest_candidates",
    "InsufficientWitnessesError",
    "InternalInconsistencyError",
    "is_lambda_connected",
    "mark_irrelevant",
    "max_flow",
    "min_cut_side",
    "minimum_equivalent_digraph",
    "NewIrrelevant",
    "newly_undeletable",
    "oracle_max_deletion",
    "oracle_max_weight",
    "oracle_reachability_equivalent",
    "parse",
    "ParseError",
    "PathSystem",
    "PreconditionError",
    "solve_directed",
    "solve_even",
    "solve_odd",
    "solve_odd_step",
    "solve_weighted",
    "submodularity_check",
    "uncross_pair",
    "ViolatingTriple",
    "WeightedSolution",
    "witness_edges",
    "WitnessSet",
]
