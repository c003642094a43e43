"""Exact recurrence-matrix calculus over Q(i).

Gaussian-rational arithmetic, exact dense linear algebra, linear
presentations of functions on word pairs (evaluation, unfolding, products,
minimization), folding/digit-sum sequence tooling, and Jacobi continued
fractions from moments, plus a verification CLI (`recqi`).
"""

from .errors import DegeneracyError, ParseError
from .gaussian import (
    GAUSSIAN_UNITS,
    I,
    ONE,
    ZERO,
    GaussianRational,
    as_gaussian,
    format_gaussian,
    parse_gaussian,
    pow_i,
)
from .jacobi import (
    JFraction,
    hankel_ratio_check,
    jfraction_from_moments,
    jfraction_to_series,
    moment_sequence,
    u_formula,
    v_formula,
)
from .linalg import (
    DenseMatrix,
    SpanBasis,
    bareiss_leading_minors,
    det_bareiss,
    det_field,
    inverse,
    kernel_basis,
    mat_mul,
    mat_transpose,
    rank,
    rref,
    solve,
)
from .recmat import (
    Presentation,
    WordPair,
    builtin,
    complexity,
    evaluate,
    index_to_word,
    minimize,
    observation_kernel,
    rec_convolution,
    rec_hadamard,
    rec_product,
    rec_scale,
    rec_sum,
    rec_transpose,
    restriction_kernel,
    same_function,
    saturation_level,
    unfold,
    word_pairs,
    word_to_index,
    zero_presentation,
)
from .report import ReportRow, VerificationReport
from .thuemorse import (
    ALL_PLUS,
    SeriesTruncation,
    SignSequence,
    beta_coeffs,
    fold,
    folding_product,
    gamma_coeffs,
    hankel,
    hankel_det_table,
    moment,
    series_product,
    tau,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_PLUS",
    "DegeneracyError",
    "DenseMatrix",
    "GAUSSIAN_UNITS",
    "GaussianRational",
    "I",
    "JFraction",
    "ONE",
    "ParseError",
    "Presentation",
    "ReportRow",
    "SeriesTruncation",
    "SignSequence",
    "SpanBasis",
    "VerificationReport",
    "WordPair",
    "ZERO",
    "as_gaussian",
    "bareiss_leading_minors",
    "beta_coeffs",
    "builtin",
    "complexity",
    "det_bareiss",
    "det_field",
    "evaluate",
    "fold",
    "folding_product",
    "format_gaussian",
    "gamma_coeffs",
    "hankel",
    "hankel_det_table",
    "hankel_ratio_check",
    "index_to_word",
    "inverse",
    "jfraction_from_moments",
    "jfraction_to_series",
    "kernel_basis",
    "mat_mul",
    "mat_transpose",
    "minimize",
    "moment",
    "moment_sequence",
    "observation_kernel",
    "parse_gaussian",
    "pow_i",
    "rank",
    "rec_convolution",
    "rec_hadamard",
    "rec_product",
    "rec_scale",
    "rec_sum",
    "rec_transpose",
    "restriction_kernel",
    "rref",
    "same_function",
    "saturation_level",
    "series_product",
    "solve",
    "tau",
    "u_formula",
    "unfold",
    "v_formula",
    "word_pairs",
    "word_to_index",
    "zero_presentation",
]
