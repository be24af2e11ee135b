"""Minimum Eccentricity Shortest Path: decision, witnesses, and structure-
parameterized solvers (modular width, distance to cluster graph, distance to
disjoint paths, exhaustive enumeration)."""

from .csc import (
    Candidate,
    CscInstance,
    CscSolution,
    solve_csc,
    solve_csc_bruteforce,
)
from .errors import (
    CapacityError,
    DisconnectedGraphError,
    GraphFormatError,
    MespError,
    SolverInvariantError,
)
from .graph import (
    DistanceMatrix,
    Graph,
    PathWitness,
    all_pairs_distances,
    build_graph,
    closed_k_neighborhood,
    dist_to_set,
    eccentricity_of_set,
    enumerate_shortest_paths,
    is_shortest_path,
    load_graph,
    parse_graph,
    path_eccentricity,
    path_within_ecc,
    unique_order,
)
from .modulators import (
    CLUSTER,
    DISJOINT_PATHS,
    MDNode,
    Modulator,
    expand_mdtree,
    find_cluster_modulator,
    find_disjoint_paths_modulator,
    is_module,
    mdtree_to_sexpr,
    minimum_cluster_modulator,
    minimum_disjoint_paths_modulator,
    modular_decomposition,
    modular_width,
    modulator_is_valid,
    residual_is_cluster,
    residual_is_disjoint_paths,
)
from .solvers import (
    MespAnswer,
    MespQuery,
    SolveStats,
    minimize_k,
    path_graph_order,
    solve_auto,
    solve_bruteforce,
    solve_distance_to_cluster,
    solve_distance_to_disjoint_paths,
    solve_modular_width,
)

__version__ = "0.1.0"

__all__ = [
    "Candidate",
    "CscInstance",
    "CscSolution",
    "solve_csc",
    "solve_csc_bruteforce",
    "CapacityError",
    "DisconnectedGraphError",
    "GraphFormatError",
    "MespError",
    "SolverInvariantError",
    "DistanceMatrix",
    "Graph",
    "PathWitness",
    "all_pairs_distances",
    "build_graph",
    "closed_k_neighborhood",
    "dist_to_set",
    "eccentricity_of_set",
    "enumerate_shortest_paths",
    "is_shortest_path",
    "load_graph",
    "parse_graph",
    "path_eccentricity",
    "path_within_ecc",
    "unique_order",
    "CLUSTER",
    "DISJOINT_PATHS",
    "MDNode",
    "Modulator",
    "expand_mdtree",
    "find_cluster_modulator",
    "find_disjoint_paths_modulator",
    "is_module",
    "mdtree_to_sexpr",
    "minimum_cluster_modulator",
    "minimum_disjoint_paths_modulator",
    "modular_decomposition",
    "modular_width",
    "modulator_is_valid",
    "residual_is_cluster",
    "residual_is_disjoint_paths",
    "MespAnswer",
    "MespQuery",
    "SolveStats",
    "minimize_k",
    "path_graph_order",
    "solve_auto",
    "solve_bruteforce",
    "solve_distance_to_cluster",
    "solve_distance_to_disjoint_paths",
    "solve_modular_width",
    "__version__",
]
