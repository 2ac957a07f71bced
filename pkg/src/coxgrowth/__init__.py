"""Exact growth data for finitely generated Coxeter systems.

Everything is integer or rational arithmetic: canonical-word enumeration
of metric balls, sphere and descent statistics with their counting
identities, rational growth series with finiteness verdicts at rational
points, and chamber-level geometry checks (projections, walls).
"""
from .ball import (
    IDENTITY,
    Ball,
    GroupElement,
    build_ball,
    oracle_reduce,
)
from .coxmatrix import (
    INF,
    INFINITE,
    CoxeterMatrix,
    DiagramProperties,
    FiniteTypeLabel,
    classify_subset,
    compare_preorder,
    diagram_properties,
    load_matrix,
    matrix_to_data,
    parse_matrix_data,
    path_matrix,
    poincare_polynomial,
    spherical_subsets,
    uniform_matrix,
    validate_matrix,
)
from .errors import (
    BadDiagonalError,
    BadOffDiagonalError,
    ClassificationError,
    DepthExceededError,
    DiagramNotCompleteError,
    GeneratorOutOfRangeError,
    HypothesisError,
    LabelTooSmallError,
    MatrixError,
    NegativeCoefficientError,
    NonSymmetricError,
    NotSphericalError,
    NotSquareError,
    NotUniformError,
    OracleBudgetError,
    RangeEmptyError,
    RankTooSmallError,
    ResidueIncompleteError,
    ResourceLimitError,
    SingularAtZeroError,
)
from .geometry import (
    IN_BOUNDARY,
    INSIDE_ALPHA,
    INSIDE_MINUS_ALPHA,
    Residue,
    RootHandle,
    WallSample,
    gallery_crossings,
    gallery_distance,
    left_apply,
    parallel_check,
    projection,
    rank2_complete_residues,
    reflections,
    residue,
    residue_root_trichotomy,
    root_membership,
    simple_root,
    verify_exit_ascent,
    verify_not_both_down,
    verify_projection_collapse,
    verify_wall_pair_uniqueness,
    wall_sample,
)
from .report import Comparison, VerificationReport
from .series import (
    ConvergenceVerdict,
    PoleAt,
    QuotientReport,
    RationalFunction,
    attach_ratio_window,
    evaluate_at_rational,
    finiteness_verdict,
    quotient_criterion,
    rational_growth_series,
    taylor_coefficients,
)
from .stats import (
    SphereStats,
    compute_stats,
    descent_ratio_floor,
    verify_descent_ratio,
    verify_descent_sum_lower,
    verify_growth_lower,
    verify_growth_upper,
    verify_two_descent_recursion,
    verify_up_edge_balance,
)

__version__ = "0.1.0"

__all__ = [
    "INF",
    "INFINITE",
    "IDENTITY",
    "IN_BOUNDARY",
    "INSIDE_ALPHA",
    "INSIDE_MINUS_ALPHA",
    "Ball",
    "BadDiagonalError",
    "BadOffDiagonalError",
    "ClassificationError",
    "Comparison",
    "ConvergenceVerdict",
    "CoxeterMatrix",
    "DepthExceededError",
    "DiagramNotCompleteError",
    "DiagramProperties",
    "FiniteTypeLabel",
    "GeneratorOutOfRangeError",
    "GroupElement",
    "HypothesisError",
    "LabelTooSmallError",
    "MatrixError",
    "NegativeCoefficientError",
    "NonSymmetricError",
    "NotSphericalError",
    "NotSquareError",
    "NotUniformError",
    "OracleBudgetError",
    "PoleAt",
    "QuotientReport",
    "RangeEmptyError",
    "RankTooSmallError",
    "RationalFunction",
    "Residue",
    "ResidueIncompleteError",
    "ResourceLimitError",
    "RootHandle",
    "SingularAtZeroError",
    "SphereStats",
    "VerificationReport",
    "WallSample",
    "attach_ratio_window",
    "build_ball",
    "classify_subset",
    "compare_preorder",
    "compute_stats",
    "descent_ratio_floor",
    "diagram_properties",
    "evaluate_at_rational",
    "finiteness_verdict",
    "gallery_crossings",
    "gallery_distance",
    "left_apply",
    "load_matrix",
    "matrix_to_data",
    "oracle_reduce",
    "parallel_check",
    "parse_matrix_data",
    "path_matrix",
    "poincare_polynomial",
    "projection",
    "quotient_criterion",
    "rank2_complete_residues",
    "rational_growth_series",
    "reflections",
    "residue",
    "residue_root_trichotomy",
    "root_membership",
    "simple_root",
    "spherical_subsets",
    "taylor_coefficients",
    "uniform_matrix",
    "validate_matrix",
    "verify_descent_ratio",
    "verify_descent_sum_lower",
    "verify_exit_ascent",
    "verify_growth_lower",
    "verify_growth_upper",
    "verify_not_both_down",
    "verify_projection_collapse",
    "verify_two_descent_recursion",
    "verify_up_edge_balance",
    "verify_wall_pair_uniqueness",
    "wall_sample",
]
