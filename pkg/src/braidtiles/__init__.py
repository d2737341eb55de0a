"""Exact computations with braid groups, planar tile diagrams, graph Artin
groups, and the homomorphisms connecting them to symplectic matrices."""

from .artin import (
    AbelianInvariants,
    Certificate,
    CoxeterSystem,
    Presentation,
    PresentationError,
    abelianization,
    braid_presentation,
    certify_nontrivial,
    presentation_from_graph,
)
from .braid import (
    BraidParseError,
    BraidWord,
    Permutation,
    WordProblemMismatch,
    artin_action,
    cable,
    equal,
    format_braid_word,
    handle_reduce,
    is_trivial,
    mirror,
    parse_braid_word,
    underlying_permutation,
    wreath_multiply,
)
from .graphs import HalfEdge, MarkedGraph
from .homs import (
    CurveClass,
    DiscrepancyResult,
    EdgeTransvectionRep,
    MirroredPair,
    band_generator,
    block_permutation_image,
    braid_to_symplectic,
    cabling_discrepancy,
    chain_classes,
    check_relations,
    edge_transvection_image,
    half_twist_image,
    mirrored_pair,
    transvection,
    wreath_symplectic,
)
from .linalg import (
    ExactMatrix,
    SymplecticForm,
    invariant_factors,
    is_symplectic,
    smith_normal_form,
)
from .reporting import CheckRecord, Report
from .tiles import (
    TileExpr,
    TileNormalForm,
    TileParseError,
    compose,
    disjoint_union,
    endomorphism_presentation,
    enumerate_tiles,
    enumerate_trees,
    equal_tiles,
    format_tile_expression,
    identity,
    marked_graph_of,
    marked_point_count,
    normal_form,
    parse_tile_expression,
    to_expression,
)
from .verify import paper_suite, random_suite

__version__ = "0.1.0"

__all__ = [
    "AbelianInvariants",
    "BraidParseError",
    "BraidWord",
    "Certificate",
    "CheckRecord",
    "CoxeterSystem",
    "CurveClass",
    "DiscrepancyResult",
    "EdgeTransvectionRep",
    "ExactMatrix",
    "HalfEdge",
    "MarkedGraph",
    "MirroredPair",
    "Permutation",
    "Presentation",
    "PresentationError",
    "Report",
    "SymplecticForm",
    "TileExpr",
    "TileNormalForm",
    "TileParseError",
    "WordProblemMismatch",
    "abelianization",
    "artin_action",
    "band_generator",
    "block_permutation_image",
    "braid_presentation",
    "braid_to_symplectic",
    "cable",
    "cabling_discrepancy",
    "certify_nontrivial",
    "chain_classes",
    "check_relations",
    "compose",
    "disjoint_union",
    "edge_transvection_image",
    "endomorphism_presentation",
    "enumerate_tiles",
    "enumerate_trees",
    "equal",
    "equal_tiles",
    "format_braid_word",
    "format_tile_expression",
    "half_twist_image",
    "handle_reduce",
    "identity",
    "invariant_factors",
    "is_symplectic",
    "is_trivial",
    "marked_graph_of",
    "marked_point_count",
    "mirror",
    "mirrored_pair",
    "normal_form",
    "paper_suite",
    "parse_braid_word",
    "parse_tile_expression",
    "presentation_from_graph",
    "random_suite",
    "smith_normal_form",
    "to_expression",
    "transvection",
    "underlying_permutation",
    "wreath_multiply",
    "wreath_symplectic",
]
