"""Exact combinatorics of edge polytopes of finite connected simple graphs:
hyperplane decompositions, normality, and quadratic toric-ideal checks."""

from .criteria import (
    NormalityReport,
    QuadraticReport,
    QuadraticViolation,
    even_cycle_ok,
    odd_cycle_condition,
    odd_pair_ok,
    quadratic_condition,
)
from .decompose import (
    Decomposition,
    DecompositionWitness,
    MultipartiteCount,
    SignAssignment,
    WeightRejection,
    canonical_decomposition,
    count_multipartite_decompositions,
    edge_sign,
    enumerate_accepted_weight_vectors,
    enumerate_decompositions,
    is_decomposable,
    lift_type2_to_type1,
    validate_weights,
    weight_type,
)
from .errors import CapExceededError, ParseError
from .graph import (
    Chord,
    Cycle,
    PartSpec,
    SimpleGraph,
    bipartition,
    bridges_between,
    chords_cross,
    complete_graph,
    complete_multipartite,
    cycle_chords,
    cycle_graph,
    enumerate_induced_odd_cycles,
    enumerate_simple_cycles,
    generate_graph,
    is_connected,
    parse_graph,
    path_graph,
    random_connected,
    render_edge_list,
)
from .polytope import (
    cycle_compatible,
    is_polytope_edge,
    polytope_dimension,
    polytope_edges,
    rho,
)
from .verify import (
    CorpusSpec,
    TheoremReport,
    build_corpus,
    corpus_result_to_dict,
    corpus_verify,
    verify_theorems,
)

__all__ = [name for name in dir() if not name.startswith("_")]
