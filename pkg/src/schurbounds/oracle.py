"""Reference eigenvalues by cyclic complex Jacobi rotations.

This is the ground truth every bound is checked against, so it deliberately
does not call into LAPACK.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import IndexOutOfRange, NoConvergence
from .hermitian import HermitianMatrix, principal_submatrix

DEFAULT_ORACLE_TOL = 1e-12
DEFAULT_MAX_SWEEPS = 100


@dataclass(frozen=True)
class Spectrum:
    values: np.ndarray
    sweeps_used: int
    offdiag_norm_final: float

    @property
    def n(self) -> int:
        return len(self.values)


def _offdiag_norm(a: np.ndarray) -> float:
    off = a - np.diag(a.diagonal())
    return float(np.sqrt(np.sum(off.real ** 2 + off.imag ** 2)))


def _rotate(a: np.ndarray, p: int, q: int):
    """Apply the unitary similarity that zeroes ``a[p, q]`` (``p < q``), in place."""
    apq = a[p, q]
    mag = abs(apq)
    phase = apq / mag
    app, aqq = a[p, p].real, a[q, q].real
    theta = (aqq - app) / (2.0 * mag)
    if abs(theta) > 1e150:
        tan = 0.5 / theta
    else:
        tan = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
    c = 1.0 / math.sqrt(tan * tan + 1.0)
    s = tan * c
    # J = diag-phase followed by a real rotation: new col p = c*col_p - s*conj(phase)*col_q
    sc = s * phase.conjugate()
    cc = c * phase.conjugate()
    col_p = a[:, p].copy()
    col_q = a[:, q].copy()
    a[:, p] = c * col_p - sc * col_q
    a[:, q] = s * col_p + cc * col_q
    row_p = a[p, :].copy()
    row_q = a[q, :].copy()
    a[p, :] = c * row_p - s * phase * row_q
    a[q, :] = s * row_p + c * phase * row_q
    a[p, p] = app - tan * mag
    a[q, q] = aqq + tan * mag
    a[p, q] = a[q, p] = 0.0


def jacobi_eigenvalues(
    h: HermitianMatrix | np.ndarray,
    tol: float = DEFAULT_ORACLE_TOL,
    max_sweeps: int = DEFAULT_MAX_SWEEPS,
) -> Spectrum:
    """Eigenvalues of ``h`` in ascending order.

    Sweeps run cyclically by rows until the off-diagonal Frobenius norm is at
    most ``tol * ||h||_F``.  Pairs with ``|a_pq| <= tol * ||h||_F / n**2`` are
    skipped.  Raises :class:`NoConvergence` when ``max_sweeps`` is exhausted.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if max_sweeps < 1:
        raise ValueError("max_sweeps must be at least 1")
    a = np.array(h.entries if isinstance(h, HermitianMatrix) else h, dtype=np.complex128)
    n = a.shape[0]
    fro = float(np.sqrt(np.sum(a.real ** 2 + a.imag ** 2)))
    threshold = tol * fro
    skip = threshold / (n * n)

    off = _offdiag_norm(a)
    sweeps = 0
    while off > threshold:
        if sweeps == max_sweeps:
            raise NoConvergence(sweeps, off, threshold)
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(a[p, q]) > skip:
                    _rotate(a, p, q)
        off = _offdiag_norm(a)
    return Spectrum(np.sort(a.diagonal().real), sweeps, off)


def partial_sum(s: Spectrum, r: int) -> float:
    """Sum of the ``r`` smallest eigenvalues."""
    if not 1 <= r <= s.n:
        raise IndexOutOfRange(f"r = {r} not within 1..{s.n}")
    return float(np.sum(s.values[:r]))


def interlacing_check(
    h: HermitianMatrix,
    indices: Sequence[int],
    s_full: Spectrum,
    tol: float = 1e-8,
    oracle_tol: float = DEFAULT_ORACLE_TOL,
    max_sweeps: int = DEFAULT_MAX_SWEEPS,
) -> bool:
    """True iff ``lambda_j(h) <= lambda_j(h_sub) + tol`` for every ``j <= len(indices)``."""
    sub = jacobi_eigenvalues(principal_submatrix(h, indices), oracle_tol, max_sweeps)
    m = sub.n
    return bool(np.all(s_full.values[:m] <= sub.values + tol))
