"""Spanning trees that contain perfect matchings.

Solvers for trees-with-matchings over two-valued hosts, strongly
balanced spanning trees on bipartite graphs, the hardness reductions
tying those problems to Hamiltonian cycle and 3-SAT, and exhaustive
oracles used to cross-check every solver.
"""

from .errors import (
    BadLayoutError,
    BadRotationError,
    DisconnectedError,
    GraphFormatError,
    GroundSetMismatchError,
    HostMismatchError,
    Infeasible,
    MalformedTreeError,
    NotATreeError,
    NotBipartiteError,
    NotCubicError,
    NotHamiltonianError,
    NotSatisfyingError,
    NotStronglyBalancedError,
    OddDeficiencyError,
    OddVertexCountError,
    TooLargeError,
    TreematchError,
    TruncatedError,
    UnbalancedError,
    WeightOrderError,
)
from .graph import (
    MINUS,
    PLUS,
    Bipartition,
    BipartitionedTree,
    WeightedGraph,
    as_bipartitioned_tree,
    bipartition_of,
    connected_components,
    format_graph,
    is_connected,
    is_hamiltonian_cycle,
    load_graph,
    parse_graph,
    save_graph,
)
from .matching import (
    DeficiencyProfile,
    Matching,
    deficiency,
    deficiency_profile,
    maximum_matching,
    tree_perfect_matching,
)
from .matroid import (
    GraphicMatroid,
    Matroid,
    PartitionMatroid,
    free_matroid,
    min_weight_common_base,
    truncate,
)
from .pmst import (
    AugmentationResult,
    HostKind,
    MinPmstResult,
    augmentation_optimum,
    build_tree_containing_matching,
    greedy_augment,
    min_pmst_two_valued,
    pmst_feasible,
)
from .reductions import (
    CnfFormula,
    CnfLayout,
    HcReduction,
    RotationSystem,
    SatReduction,
    complete_with_weight_two,
    default_layout,
    extract_assignment_from_tree,
    format_cnf_layout,
    format_rotation,
    map_assignment_to_sb_tree,
    map_hc_to_tree,
    parse_cnf_layout,
    parse_rotation,
    reduce_hc_to_minpmst,
    reduce_sat_to_sbst,
    replace_leaves,
)
from .sbst import (
    MinSbstResult,
    SbstCertificate,
    alternating_characterization,
    is_strongly_balanced,
    min_sbst_bipartite,
)

__version__ = "0.1.0"

__all__ = [
    "AugmentationResult",
    "BadLayoutError",
    "BadRotationError",
    "Bipartition",
    "BipartitionedTree",
    "CnfFormula",
    "CnfLayout",
    "DeficiencyProfile",
    "DisconnectedError",
    "GraphFormatError",
    "GraphicMatroid",
    "GroundSetMismatchError",
    "HcReduction",
    "HostKind",
    "HostMismatchError",
    "Infeasible",
    "MINUS",
    "MalformedTreeError",
    "Matching",
    "Matroid",
    "MinPmstResult",
    "MinSbstResult",
    "NotATreeError",
    "NotBipartiteError",
    "NotCubicError",
    "NotHamiltonianError",
    "NotSatisfyingError",
    "NotStronglyBalancedError",
    "OddDeficiencyError",
    "OddVertexCountError",
    "PLUS",
    "PartitionMatroid",
    "RotationSystem",
    "SatReduction",
    "SbstCertificate",
    "TooLargeError",
    "TreematchError",
    "TruncatedError",
    "UnbalancedError",
    "WeightOrderError",
    "WeightedGraph",
    "alternating_characterization",
    "as_bipartitioned_tree",
    "augmentation_optimum",
    "bipartition_of",
    "build_tree_containing_matching",
    "complete_with_weight_two",
    "connected_components",
    "default_layout",
    "deficiency",
    "deficiency_profile",
    "extract_assignment_from_tree",
    "format_cnf_layout",
    "format_graph",
    "format_rotation",
    "free_matroid",
    "greedy_augment",
    "is_connected",
    "is_hamiltonian_cycle",
    "is_strongly_balanced",
    "load_graph",
    "map_assignment_to_sb_tree",
    "map_hc_to_tree",
    "maximum_matching",
    "min_pmst_two_valued",
    "min_sbst_bipartite",
    "min_weight_common_base",
    "parse_cnf_layout",
    "parse_graph",
    "parse_rotation",
    "pmst_feasible",
    "reduce_hc_to_minpmst",
    "reduce_sat_to_sbst",
    "replace_leaves",
    "save_graph",
    "tree_perfect_matching",
    "truncate",
]
