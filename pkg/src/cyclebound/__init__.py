"""Exact cycle-length invariants and constructive cycle surgery."""

from .graphs import (
    Graph,
    GraphError,
    Graph6Error,
    complete,
    complete_bipartite,
    components,
    cycle_graph,
    encode_graph6,
    from_edges,
    girth,
    is_connected,
    is_petersen,
    min_degree,
    parse_graph6,
    petersen,
    random_gnp,
    relabel,
)
from .enumeration import all_graphs, canonical_key, connected_graphs
from .invariants import (
    OrientedCycle,
    Path,
    ResourceLimitError,
    Toughness,
    all_longest_cycles,
    all_longest_paths_in,
    circumference,
    is_hamiltonian,
    longest_path_in,
    toughness,
    vertex_connectivity,
)
from .surgery import (
    DEFAULT_LIMITS,
    IntermediatePath,
    SearchLimits,
    SegmentDecomposition,
    SurgeryMove,
    claim_moves,
    candidate_paths,
    enumerate_intermediate_paths,
    heuristic_longest_cycle,
    improve_once,
    segment_decomposition,
    splice_intermediate,
)
from .verifier import (
    DEFAULT_THEOREMS,
    THEOREMS,
    InvariantBundle,
    Report,
    Status,
    Verdict,
    batch_verify,
    check_corollary_1,
    check_lemma_1,
    check_lemma_2,
    check_lemma_3,
    check_theorem_1,
    check_theorem_A,
    check_theorem_B,
    check_theorem_C,
    compute_bundle,
    evaluate_graph,
    record_line,
    render_table,
)

__version__ = "0.1.0"
