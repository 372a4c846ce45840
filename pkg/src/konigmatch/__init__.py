"""Bipartite matchings, minimum vertex covers, and the procedures
mapping between them: the classical cover-from-matching construction,
its reverse, star-studded graphs, and the classification of maximal
matchings that yield minimum covers — all cross-checked against
brute-force oracles on exhaustive small-graph corpora.
"""

from .graph import (
    BipartiteGraph,
    ComponentDecomposition,
    build_graph,
    connected_components,
    induced_subgraph,
    neighbors,
    procedure_sides,
)
from .matching import (
    AlternatingPath,
    Matching,
    augment,
    find_augmenting_path,
    greedy_maximal_matching,
    is_disjoint_cycle_union,
    is_maximal,
    maximum_matching,
    symmetric_difference,
)
from .konig import (
    VertexCover,
    ZSet,
    is_minimal_cover,
    is_minimum_cover,
    is_vertex_cover,
    konig_cover,
    z_set,
)
from .reverse import (
    CoverSplit,
    ReverseResult,
    reverse_konig,
    reverse_procedure_up,
    saturating_matching_down,
    split_by_cover,
)
from .paths import (
    ClassificationVerdict,
    PathStructure,
    check_subgraph,
    classify_matching,
    cover_delta_under_augment,
    enumerate_augmenting_paths,
    hat_subgraph,
    meet_join,
    path_structure,
)
from .stars import (
    StarStuddedGraph,
    is_enumeratively_konig_egervary,
    lift_cover,
    restrict_cover,
    star_stud,
)
from .oracle import (
    OracleBudget,
    all_matchings,
    all_maximal_matchings,
    all_minimum_covers,
    hall_condition,
)
from .experiments import TrialConfig, TrialReport, run_trials

__all__ = [name for name in dir() if not name.startswith("_")]
