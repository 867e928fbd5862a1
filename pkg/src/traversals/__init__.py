"""Self-similar d-dimensional grid traversals.

Sixteen traversal families (Morton/Z order, U order, Gray-code orders,
simplex orders, five Hilbert-curve generalizations and four Peano-curve
variants) in one signed-permutation notation, with exact enumeration,
bit-matrix ranking, squaring, and property verification.
"""

from .analysis import (
    AdjacencyProfile,
    PropertyReport,
    adjacency_profile,
    check_base_pattern,
    check_dominance,
    check_facet_order,
    check_palindromic,
    check_straight_jumping,
    check_well_folded_rank,
    component_count,
    max_bbox_ratio,
    section_component_audit,
)
from .bitmatrix import (
    CoordinateMatrix,
    RankWord,
    cell_of_rank,
    gray,
    gray_inverse,
    rank_of_cell,
)
from .engine import (
    NotCubicError,
    NotSymmetricError,
    Path,
    find_reversal_symmetry,
    generate_full_path,
    generate_path,
    iter_path,
    locate,
    squared_definition,
    squared_path,
)
from .generators import (
    BetaUndefinedError,
    FIXED_NAMES,
    TraversalKind,
    builtin_fixed,
    gen_base_pattern,
    generate,
)
from .notation import (
    Move,
    ParseError,
    SignedPermutation,
    TraversalDefinition,
    format_definition,
    parse_definition,
)

__version__ = "0.1.0"

__all__ = [
    "AdjacencyProfile",
    "BetaUndefinedError",
    "CoordinateMatrix",
    "FIXED_NAMES",
    "Move",
    "NotCubicError",
    "NotSymmetricError",
    "ParseError",
    "Path",
    "PropertyReport",
    "RankWord",
    "SignedPermutation",
    "TraversalDefinition",
    "TraversalKind",
    "adjacency_profile",
    "builtin_fixed",
    "cell_of_rank",
    "check_base_pattern",
    "check_dominance",
    "check_facet_order",
    "check_palindromic",
    "check_straight_jumping",
    "check_well_folded_rank",
    "component_count",
    "find_reversal_symmetry",
    "format_definition",
    "gen_base_pattern",
    "generate",
    "generate_full_path",
    "generate_path",
    "gray",
    "gray_inverse",
    "iter_path",
    "locate",
    "max_bbox_ratio",
    "parse_definition",
    "rank_of_cell",
    "section_component_audit",
    "squared_definition",
    "squared_path",
    "__version__",
]
