"""Graph toolkit for a clique-bounded chromatic number.

Recognizes graphs with no induced claw, H1, or H2; verifies the structural
lemma behind the chi <= omega + 1 bound; computes exact certified
invariants; and produces bounded colorings via Kempe-chain repair.
"""
from .exact import (
    Coloring,
    KempeComponent,
    SolveTimeout,
    StaleComponentError,
    chromatic_number,
    clique_number,
    greedy_upper_bound,
    is_k_colorable,
    kempe_components,
    kempe_swap,
    verify_coloring,
)
from .graph import (
    DimacsError,
    EdgeListError,
    Graph,
    Graph6Error,
    GraphError,
    MAX_VERTICES,
    VertexSet,
    bits,
    blowup,
    closed_neighbors,
    complement,
    complete,
    cycle,
    enumerate_labeled,
    format_graph6,
    induced,
    join,
    make_graph,
    mycielski,
    neighbors,
    parse_dimacs,
    parse_edge_list,
    parse_graph6,
    path,
    write_dimacs,
    write_edge_list,
)
from .harness import (
    SuiteReport,
    TheoremVerdict,
    batch_verify,
    exhaustive_check,
    generate_family,
    join_of_c5s,
    mycielski_iterate,
    necessity_suite,
    random_claw_free_graph,
    random_class_graph,
    tightness_suite,
    verify_theorem,
)
from .patterns import (
    CLAW,
    DIAMOND,
    FORBIDDEN,
    H1,
    H2,
    ClassVerdict,
    Embedding,
    Pattern,
    all_induced,
    find_induced,
    is_class_member,
    make_pattern,
    validate_embedding,
)
from .repair import (
    NonMemberError,
    RepairOutcome,
    color_bounded,
    color_class_graph,
    insertion_order,
)
from .structure import (
    Complete,
    Lemma1Case,
    PreconditionError,
    StructureReport,
    ThreeWithMiddle,
    TwoNonadjacent,
    VertexClassification,
    Violation,
    classify_vertex,
    max_clique_in,
    neighborhood_clique,
    verify_lemma1,
)

__version__ = "0.1.0"
