"""Exact combinatorics of chordal simplicial complexes, d-collapsibility,
and componentwise linear square-free monomial ideals.

The core objects are `SimplicialComplex` (facet antichains of vertex
bitmasks on {1..n}) and `SquarefreeIdeal` (minimal generator supports),
related by the Stanley-Reisner correspondence. On top of those sit the
d-closure / simplicial-order / collapsing machinery with replayable
certificates, exact field homology with Hochster-style Betti tables,
and checkers for the structured families (stable, strongly stable,
shifted, vertex decomposable, nested-block Gotzmann form, σ-images).
"""

__version__ = "0.1.0"

from .betti import (
    CHAR0,
    GF2,
    BettiTable,
    FieldSpec,
    betti_table,
    has_linear_resolution,
    is_componentwise_linear,
    reduced_homology_dims,
    regularity,
)
from .bitsets import mask_from_vertices, vertices_from_mask
from .chordality import (
    DEFAULT_BUDGET,
    FreeSequence,
    chordality_check_range,
    d_closure,
    find_simplicial_order,
    free_faces,
    is_chordal,
    is_d_chordal,
    is_d_closure,
    is_d_collapsible,
    simplicial_faces,
    verify_sequence,
)
from .complexes import MAX_VERTICES, SimplicialComplex, as_mask, simplex_skeleton
from .errors import (
    DimensionRangeError,
    FormatError,
    NotAClosureError,
    NotAFaceError,
    NotEquigeneratedError,
    NotStronglyStableError,
    SearchBudgetExceeded,
    SRChordalError,
    VertexRangeError,
    VoidComplexError,
    ZeroIdealError,
)
from .families import (
    GotzmannDecomposition,
    classify,
    gotzmann_decomposition,
    is_shifted,
    is_squarefree_stable,
    is_squarefree_strongly_stable,
    is_strongly_stable,
    is_vertex_decomposable,
    shedding_vertices,
    sigma_pipeline,
)
from .ideals import (
    Monomial,
    MonomialIdeal,
    SquarefreeIdeal,
    degree_component,
    format_squarefree_ideal,
    parse_monomial_ideal,
    parse_squarefree_ideal,
    sigma_image,
    squarefree_operator,
    stanley_reisner_complex,
    stanley_reisner_ideal,
    truncation_leq,
)

__all__ = [
    "BettiTable",
    "CHAR0",
    "DEFAULT_BUDGET",
    "DimensionRangeError",
    "FieldSpec",
    "FormatError",
    "FreeSequence",
    "GF2",
    "GotzmannDecomposition",
    "MAX_VERTICES",
    "Monomial",
    "MonomialIdeal",
    "NotAClosureError",
    "NotAFaceError",
    "NotEquigeneratedError",
    "NotStronglyStableError",
    "SRChordalError",
    "SearchBudgetExceeded",
    "SimplicialComplex",
    "SquarefreeIdeal",
    "VertexRangeError",
    "VoidComplexError",
    "ZeroIdealError",
    "as_mask",
    "betti_table",
    "chordality_check_range",
    "classify",
    "d_closure",
    "degree_component",
    "find_simplicial_order",
    "format_squarefree_ideal",
    "free_faces",
    "gotzmann_decomposition",
    "has_linear_resolution",
    "is_chordal",
    "is_componentwise_linear",
    "is_d_chordal",
    "is_d_closure",
    "is_d_collapsible",
    "is_shifted",
    "is_squarefree_stable",
    "is_squarefree_strongly_stable",
    "is_strongly_stable",
    "is_vertex_decomposable",
    "mask_from_vertices",
    "parse_monomial_ideal",
    "parse_squarefree_ideal",
    "reduced_homology_dims",
    "regularity",
    "shedding_vertices",
    "sigma_image",
    "sigma_pipeline",
    "simplex_skeleton",
    "simplicial_faces",
    "squarefree_operator",
    "stanley_reisner_complex",
    "stanley_reisner_ideal",
    "truncation_leq",
    "verify_sequence",
]
