"""Validated Hermitian matrices, diagonal ordering and row quantities.

Every public index in this package is 1-based, so that ``r``, ``t`` and ``k``
read the same way as in the bound formulas.  Arrays are stored 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import EmptyMatrix, IndexOutOfRange, MatrixFormatError, NonFinite, NotHermitian

DEFAULT_HERMITIAN_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class HermitianMatrix:
    """An exactly Hermitian complex matrix.

    Instances are produced by :func:`validate_hermitian`, :func:`canonical_order`
    or :func:`principal_submatrix`; ``entries`` is a read-only ``complex128``
    array.  ``permutation[i]`` is the 1-based index, in the matrix handed to
    :func:`validate_hermitian`, of the row now sitting at position ``i + 1``.
    """

    entries: np.ndarray
    permutation: tuple[int, ...]
    hermiticity_tol: float = DEFAULT_HERMITIAN_TOL
    _diag: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        a = np.array(self.entries, dtype=np.complex128, copy=True)
        a.flags.writeable = False
        d = a.diagonal().real.copy()
        d.flags.writeable = False
        object.__setattr__(self, "entries", a)
        object.__setattr__(self, "_diag", d)
        object.__setattr__(self, "permutation", tuple(int(p) for p in self.permutation))

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    @property
    def diagonal(self) -> np.ndarray:
        """Real diagonal, in storage order."""
        return self._diag

    @property
    def is_canonical(self) -> bool:
        return bool(np.all(self._diag[:-1] <= self._diag[1:]))

    @property
    def trace(self) -> float:
        return float(self._diag.sum())

    def abs2(self) -> np.ndarray:
        """Elementwise ``|a_ij|**2`` computed as ``re**2 + im**2``."""
        a = self.entries
        return a.real ** 2 + a.imag ** 2

    def to_array(self) -> np.ndarray:
        return self.entries.copy()

    def __array__(self, dtype=None, copy=None):
        return self.entries.astype(dtype) if dtype is not None else self.entries.copy()

    def __eq__(self, other):
        if not isinstance(other, HermitianMatrix):
            return NotImplemented
        return self.permutation == other.permutation and np.array_equal(self.entries, other.entries)

    def __repr__(self):
        return f"HermitianMatrix(n={self.n}, diagonal={self._diag.tolist()}, permutation={self.permutation})"


@dataclass(frozen=True)
class RowQuantities:
    """Off-diagonal absolute row sums ``r`` and squared row sums ``q``."""

    r: np.ndarray
    q: np.ndarray


def _as_complex_square(raw) -> np.ndarray:
    a = np.asarray(raw)
    if a.size == 0:
        raise EmptyMatrix("matrix has no entries")
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise MatrixFormatError(f"expected a square matrix, got shape {a.shape}")
    a = a.astype(np.complex128)
    bad = ~np.isfinite(a)
    if bad.any():
        i, j = np.argwhere(bad)[0]
        raise NonFinite(int(i) + 1, int(j) + 1, complex(a[i, j]))
    return a


def validate_hermitian(raw, tol: float = DEFAULT_HERMITIAN_TOL) -> HermitianMatrix:
    """Check, symmetrize and canonically order a square complex array.

    Each pair is checked against ``|a_ij - conj(a_ji)| <= tol`` (the diagonal
    case bounds twice the imaginary part).  The returned matrix holds
    ``(a_ij + conj(a_ji)) / 2`` with a real diagonal, permuted so that the
    diagonal is ascending.
    """
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    a = _as_complex_square(raw)
    asym = np.abs(a - a.conj().T)
    worst = np.unravel_index(np.argmax(asym), asym.shape)
    if asym[worst] > tol:
        i, j = sorted(worst, reverse=True)
        raise NotHermitian(int(i) + 1, int(j) + 1, float(asym[worst]), tol)
    sym = (a + a.conj().T) / 2
    np.fill_diagonal(sym, sym.diagonal().real)
    h, _ = canonical_order(sym, tol=tol)
    return h


def canonical_order(m, tol: float = DEFAULT_HERMITIAN_TOL) -> tuple[HermitianMatrix, tuple[int, ...]]:
    """Permutation similarity that sorts the diagonal ascending.

    Ties keep their original relative order.  ``m`` may be a plain array that
    is already exactly Hermitian, or a :class:`HermitianMatrix`, in which
    case the returned permutation is composed with the one it carries.
    """
    if isinstance(m, HermitianMatrix):
        a, base, tol = m.entries, m.permutation, m.hermiticity_tol
    else:
        a = _as_complex_square(m)
        base = tuple(range(1, a.shape[0] + 1))
    order = np.argsort(a.diagonal().real, kind="stable")
    perm = tuple(base[i] for i in order)
    h = HermitianMatrix(a[np.ix_(order, order)], perm, tol)
    return h, perm


def row_quantities(h: HermitianMatrix) -> RowQuantities:
    """``r_i = sum_{j != i} |a_ij|`` and ``q_i = sum_{j != i} |a_ij|**2``."""
    mod = np.abs(h.entries)
    mod2 = h.abs2()
    np.fill_diagonal(mod, 0.0)
    np.fill_diagonal(mod2, 0.0)
    return RowQuantities(r=mod.sum(axis=1), q=mod2.sum(axis=1))


def principal_submatrix(h: HermitianMatrix, indices: Sequence[int]) -> HermitianMatrix:
    """Rows and columns ``indices`` (1-based, strictly increasing), not re-sorted."""
    idx = [int(i) for i in indices]
    if not idx:
        raise IndexOutOfRange("index set is empty")
    if any(i < 1 or i > h.n for i in idx):
        raise IndexOutOfRange(f"indices {idx} not within 1..{h.n}")
    if any(b <= a for a, b in zip(idx, idx[1:])):
        raise IndexOutOfRange(f"indices {idx} are not strictly increasing")
    z = np.asarray(idx) - 1
    return HermitianMatrix(h.entries[np.ix_(z, z)], tuple(range(1, len(idx) + 1)), h.hermiticity_tol)
