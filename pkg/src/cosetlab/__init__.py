"""Coset intersection graphs, double cosets and transversals of finite permutation groups."""

from .catalog import CatalogSpec, catalog_group
from .counting import CountReport, full_count_report
from .errors import (
    ClosureCapExceeded,
    CosetLabError,
    CycleParseError,
    DegreeMismatchError,
    IndexConditionError,
    InvariantViolation,
    MembershipError,
    NotASubgroupError,
    NotNormalError,
)
from .graph import (
    Chessboard,
    CosetGraph,
    DoubleCoset,
    Report,
    build_graph,
    chessboard_tiles,
    components,
    double_cosets,
    edge_intersection,
    verify_complete_bipartite,
    verify_double_coset_correspondence,
    verify_ratio,
    verify_tile_uniformity,
)
from .group import (
    Coset,
    CosetSide,
    PermutationGroup,
    conjugate_subgroup,
    core,
    generate,
    image_in_quotient,
    index,
    intersect,
    is_normal,
    is_subgroup,
    left_cosets,
    quotient,
    right_cosets,
    subgroup,
    trivial_group,
)
from .perm import Permutation, compose, format_cycles, identity, inverse, parse_cycles
from .transversals import (
    Transversal,
    TransversalKind,
    extendable_transversal,
    hall_matching_transversal,
    left_right_transversal,
    left_transversal,
    right_transversal,
    verify_transversal,
)

__version__ = "0.1.0"
