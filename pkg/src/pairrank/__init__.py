"""Priorities with numerical error bars from pairwise comparison matrices.

Derives element priorities by the geometric-mean and eigenvector methods,
attaches per-element error bars to both, and flags pairwise rankings as
reliable or indistinguishable based on interval overlap.
"""

from .analysis import (
    MethodComparison,
    RankingReport,
    Verdict,
    compare_estimates,
    compare_methods,
    gci,
    pair_verdict,
    rank,
    transposed_estimate,
)
from .core import (
    ComparisonMatrix,
    ElementLabels,
    consistent_matrix_from_values,
    is_transitive,
    validate_matrix,
)
from .em import EigenResult, em_errors, em_estimate, principal_eigen
from .errors import (
    BadIndex,
    BadLabels,
    DegenerateInterval,
    NoConvergence,
    NonPositiveEntry,
    NonSquare,
    NotApplicable,
    NumericalError,
    PairrankError,
    ParseError,
    SessionNotFound,
    TooFewSamples,
    TooSmall,
    ValidationError,
)
from .gmm import (
    Method,
    PriorityEstimate,
    gmm_error_exponents,
    gmm_estimate,
    matrix_lambda,
    normalize,
    row_geometric_means,
)
from .matrixio import (
    SCHEMA_VERSION,
    MatrixDocument,
    comparison_to_dict,
    estimate_from_dict,
    estimate_to_dict,
    matrix_to_json,
    parse_cell,
    parse_matrix_document,
    parse_report,
    ranking_to_dict,
    render_report,
    result_to_dict,
)
from .measurement import (
    MeasurementSet,
    SampleSummary,
    SummaryKind,
    arithmetic_summary,
    geometric_summary,
    matrix_from_measurements,
    measurements_from_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "SCHEMA_VERSION",
    "BadIndex",
    "BadLabels",
    "ComparisonMatrix",
    "DegenerateInterval",
    "EigenResult",
    "ElementLabels",
    "MatrixDocument",
    "MeasurementSet",
    "Method",
    "MethodComparison",
    "NoConvergence",
    "NonPositiveEntry",
    "NonSquare",
    "NotApplicable",
    "NumericalError",
    "PairrankError",
    "ParseError",
    "PriorityEstimate",
    "RankingReport",
    "SampleSummary",
    "SessionNotFound",
    "SummaryKind",
    "TooFewSamples",
    "TooSmall",
    "ValidationError",
    "Verdict",
    "arithmetic_summary",
    "compare_estimates",
    "compare_methods",
    "comparison_to_dict",
    "consistent_matrix_from_values",
    "em_errors",
    "em_estimate",
    "estimate_from_dict",
    "estimate_to_dict",
    "gci",
    "geometric_summary",
    "gmm_error_exponents",
    "gmm_estimate",
    "is_transitive",
    "matrix_from_measurements",
    "matrix_lambda",
    "matrix_to_json",
    "measurements_from_matrix",
    "normalize",
    "pair_verdict",
    "parse_cell",
    "parse_matrix_document",
    "parse_report",
    "principal_eigen",
    "rank",
    "ranking_to_dict",
    "render_report",
    "result_to_dict",
    "row_geometric_means",
    "transposed_estimate",
    "validate_matrix",
]
