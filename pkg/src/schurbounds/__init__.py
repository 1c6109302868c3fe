"""Sharpened Schur majorisation bounds for Hermitian matrices.

Bounds on sums of the smallest eigenvalues computed from matrix entries,
plus a Jacobi eigenvalue oracle to check them.
"""

from .bounds import (
    BoundReport,
    BoundValue,
    Source,
    best_bounds,
    gershgorin_interval,
    schur_bounds,
    theorem1_lambda_max_lower,
    theorem1_lambda_min_upper,
    theorem2_bound,
    theorem3_bound,
    two_by_two_extremes,
)
from .errors import (
    DimensionMismatch,
    EmptyInput,
    EmptyMatrix,
    IndexOutOfRange,
    InvalidIndices,
    MatrixFormatError,
    NoConvergence,
    NonFinite,
    NotHermitian,
    SchurBoundsError,
)
from .hermitian import (
    HermitianMatrix,
    RowQuantities,
    canonical_order,
    principal_submatrix,
    row_quantities,
    validate_hermitian,
)
from .oracle import Spectrum, interlacing_check, jacobi_eigenvalues, partial_sum
from .report import AnalysisRun, analyze
from .verify import BhatiaDavisDiagnostic, Verdict, bhatia_davis_diagnostic, tightness_summary, verify_bounds

__version__ = "0.1.0"
