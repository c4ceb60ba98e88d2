"""Exact distance invariants, connectivity and remoteness bounds for strong digraphs."""

from .core import (
    Digraph,
    DistanceProfile,
    Graph,
    NotStrongError,
    UnreachableVertexError,
    avg_distance,
    bidirect,
    build_digraph,
    build_graph,
    complement,
    complete_digraph,
    complete_graph,
    diameter,
    directed_cycle,
    distance_profile,
    distances_from,
    eccentricity,
    is_strong,
    path_graph,
    remoteness,
    transmission,
    underlying_graph,
)
from .connectivity import (
    ConnectivityResult,
    edge_connectivity,
    is_eulerian,
    min_semidegree,
    vertex_connectivity,
)
from .constructions import (
    LambdaPCParams,
    PathCompleteParams,
    backward_sum,
    claimed_sizes,
    construction_size,
    dpk_select,
    enumerate_kappa_pc_family,
    enumerate_lambda_pc_family,
    has_shortcut_free_hamiltonian_dipath,
    kappa_pc_digraph,
    lambda_pc_graph,
    pc_graph,
    pk_lambda_select,
    pk_select,
    profile_digraph,
    sequential_sum_graph,
    shortcut_free_dipath,
)
from .bounds import (
    BOUND_IDS,
    BoundQuery,
    BoundResult,
    evaluate,
    evaluate_bound,
    m_star,
    m_star_counted,
    sharpness_guard,
)
from .verifier import (
    CheckReport,
    Counterexample,
    EnumerationSpec,
    audit_size_formulas,
    canonical_form,
    check_eulerian_size_theorem,
    check_extremal_uniqueness,
    check_lemma_monotonicity,
    check_universal_bound,
    check_universal_bounds,
    digraph_from_canonical_hex,
    enumerate_digraphs,
)

__version__ = "0.1.0"
