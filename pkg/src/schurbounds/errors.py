"""Exception types raised by schurbounds."""


class SchurBoundsError(Exception):
    """Base class for all errors raised by this package."""


class EmptyMatrix(SchurBoundsError, ValueError):
    pass


class NonFinite(SchurBoundsError, ValueError):
    """An entry is NaN or infinite.

    ``row`` and ``col`` are 1-based.
    """

    def __init__(self, row, col, value):
        self.row, self.col, self.value = row, col, value
        super().__init__(f"entry ({row}, {col}) is not finite: {value!r}")


class NotHermitian(SchurBoundsError, ValueError):
    """Some entry differs from the conjugate of its mirror by more than the tolerance.

    ``row`` and ``col`` are 1-based and point at the worst offending pair.
    """

    def __init__(self, row, col, asymmetry, tol):
        self.row, self.col, self.asymmetry, self.tol = row, col, asymmetry, tol
        super().__init__(
            f"entry ({row}, {col}) differs from conj of ({col}, {row}) "
            f"by {asymmetry:.3e} > tol {tol:.3e}"
        )


class IndexOutOfRange(SchurBoundsError, IndexError):
    pass


class InvalidIndices(SchurBoundsError, ValueError):
    pass


class NoConvergence(SchurBoundsError, ArithmeticError):
    def __init__(self, sweeps, offdiag_norm, threshold):
        self.sweeps, self.offdiag_norm, self.threshold = sweeps, offdiag_norm, threshold
        super().__init__(
            f"Jacobi did not converge in {sweeps} sweeps "
            f"(off-diagonal norm {offdiag_norm:.3e} > {threshold:.3e})"
        )


class DimensionMismatch(SchurBoundsError, ValueError):
    pass


class EmptyInput(SchurBoundsError, ValueError):
    pass


class MatrixFormatError(SchurBoundsError, ValueError):
    """Input document could not be parsed into a square complex array."""
