"""Nonnegative matrices with prescribed real spectra.

Construct explicit nonnegative realizing matrices — permutative matrices
for Suleimanova spectra, direct sums of permutative blocks for every
realizable spectrum of order at most 4, companion matrices as a baseline —
and certify each output by characteristic-polynomial matching and
closed-form eigenpair residuals.  A budgeted pattern search explores
permutative realizations beyond the closed-form range (orders 5 to 8).
"""

from .bench import BenchEntry, BenchReport, run_bench, synthetic_spectrum
from .companion import CompanionRealization, as_realization, realize_companion
from .errors import (
    DimensionMismatchError,
    DimensionOutOfRangeError,
    DimensionTooLargeError,
    DimensionTooSmallError,
    EmptyInputError,
    InternalCaseGapError,
    NecessaryConditionViolationError,
    NonFiniteEntryError,
    NotSquareError,
    NotSuleimanovaError,
    NotZeroTraceError,
    ParseError,
    PerronViolationError,
    RealizationError,
)
from .explorer import (
    PermTuple,
    SearchResult,
    alpha_tuple,
    assemble,
    cyclic_tuple,
    explore,
    fit_first_row,
    objective,
    transposition_tuples,
)
from .linalg import (
    DenseMatrix,
    Polynomial,
    Tolerances,
    char_poly,
    direct_sum,
    eval_poly,
    from_rows,
    identity,
    is_nonnegative,
    is_permutative,
    matrices_close,
    matrix_from_csv,
    matrix_from_json,
    matrix_to_csv,
    matrix_to_json,
    poly_from_roots,
    polys_close,
)
from .small_order import quarter_sums, realize_2, realize_3, realize_4, realize_small
from .spectrum import (
    Classification,
    ConditionReport,
    Spectrum,
    SpectrumKind,
    check_necessary,
    classify,
    make_spectrum,
    power_sum,
)
from .suleimanova import (
    AlphaPermutative,
    ClosedEigensystem,
    build_alpha_permutative,
    closed_eigensystem,
    mn_inverse,
    mn_matrix,
    realize_suleimanova,
    realize_zero_trace,
    suleimanova_first_row,
)
from .verify import Realization, VerificationReport, certify, detect_blocks

__version__ = "0.1.0"

__all__ = [
    "AlphaPermutative",
    "BenchEntry",
    "BenchReport",
    "Classification",
    "ClosedEigensystem",
    "CompanionRealization",
    "ConditionReport",
    "DenseMatrix",
    "DimensionMismatchError",
    "DimensionOutOfRangeError",
    "DimensionTooLargeError",
    "DimensionTooSmallError",
    "EmptyInputError",
    "InternalCaseGapError",
    "NecessaryConditionViolationError",
    "NonFiniteEntryError",
    "NotSquareError",
    "NotSuleimanovaError",
    "NotZeroTraceError",
    "ParseError",
    "PermTuple",
    "PerronViolationError",
    "Polynomial",
    "Realization",
    "RealizationError",
    "SearchResult",
    "Spectrum",
    "SpectrumKind",
    "Tolerances",
    "VerificationReport",
    "alpha_tuple",
    "as_realization",
    "assemble",
    "build_alpha_permutative",
    "certify",
    "char_poly",
    "check_necessary",
    "classify",
    "closed_eigensystem",
    "cyclic_tuple",
    "detect_blocks",
    "direct_sum",
    "eval_poly",
    "explore",
    "fit_first_row",
    "from_rows",
    "identity",
    "is_nonnegative",
    "is_permutative",
    "make_spectrum",
    "matrices_close",
    "matrix_from_csv",
    "matrix_from_json",
    "matrix_to_csv",
    "matrix_to_json",
    "mn_inverse",
    "mn_matrix",
    "objective",
    "poly_from_roots",
    "polys_close",
    "power_sum",
    "quarter_sums",
    "realize_2",
    "realize_3",
    "realize_4",
    "realize_companion",
    "realize_small",
    "realize_suleimanova",
    "realize_zero_trace",
    "run_bench",
    "suleimanova_first_row",
    "synthetic_spectrum",
    "transposition_tuples",
]
