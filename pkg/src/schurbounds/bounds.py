"""Schur partial-sum bounds and their sharpened forms.

All bounds are upper bounds on ``lambda_1 + ... + lambda_r`` (eigenvalues
ascending), except :func:`theorem1_lambda_max_lower`, which is a lower bound on
the largest eigenvalue.  Functions expect a canonical matrix, i.e. one whose
diagonal is ascending; :func:`~schurbounds.hermitian.validate_hermitian`
always returns one.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidIndices
from .hermitian import HermitianMatrix, row_quantities

DEGENERACY_EPS = 1e-12


class Source(enum.Enum):
    """Which inequality produced a bound.  Declaration order is the report order."""

    SCHUR = "Schur"
    THEOREM1_LOW = "Theorem1Low"
    THEOREM1_HIGH = "Theorem1High"
    THEOREM2 = "Theorem2"
    THEOREM3 = "Theorem3"
    GERSHGORIN_LOW = "GershgorinLow"
    GERSHGORIN_HIGH = "GershgorinHigh"

    @property
    def rank(self) -> int:
        return _SOURCE_RANK[self]


_SOURCE_RANK = {s: i for i, s in enumerate(Source)}


@dataclass(frozen=True)
class BoundValue:
    """A single bound together with where it came from.

    When ``degenerate`` is set the correction term was dropped because its
    denominator fell below :data:`DEGENERACY_EPS`; ``value`` then holds the
    uncorrected diagonal quantity.  ``r`` is the number of eigenvalues summed,
    ``t`` and ``k`` the free indices of the sharpened bounds (1-based).
    """

    value: float
    source: Source
    r: int | None = None
    t: int | None = None
    k: int | None = None
    degenerate: bool = False
    denominator: float | None = None

    def sort_key(self):
        return (self.r or 0, self.source.rank, self.t or 0, self.k or 0)


@dataclass(frozen=True)
class BoundReport:
    n: int
    schur: np.ndarray
    per_r_best: list[BoundValue]
    lambda_min_upper: BoundValue
    lambda_max_lower: BoundValue
    gershgorin: tuple[float, float]
    permutation: tuple[int, ...]
    candidates: list[BoundValue] = field(default_factory=list, repr=False)

    def best(self, r: int) -> BoundValue:
        """Best bound for the sum of the ``r`` smallest eigenvalues, ``1 <= r <= n - 1``."""
        return self.per_r_best[r - 1]

    @property
    def all_corrections_zero(self) -> bool:
        return all(b.source is Source.SCHUR for b in self.per_r_best) and all(
            c.value == self.schur[c.r - 1] for c in self.candidates
        )


def _require_canonical(h: HermitianMatrix):
    if not h.is_canonical:
        raise ValueError("diagonal is not ascending; pass the matrix through canonical_order first")


class _Tables:
    """Per-matrix quantities shared by every sharpened bound.

    ``abs_prefix[i][m]`` is ``sum_{s < m} |a_is|`` with the diagonal excluded;
    ``mod2_prefix`` is the same for ``|a_is|**2``.
    """

    def __init__(self, h: HermitianMatrix):
        mod = np.abs(h.entries)
        mod2 = h.abs2()
        np.fill_diagonal(mod, 0.0)
        np.fill_diagonal(mod2, 0.0)
        zeros = np.zeros((h.n, 1))
        self.n = h.n
        self.d = h.diagonal.tolist()
        self.mod = mod.tolist()
        self.mod2 = mod2.tolist()
        self.abs_prefix = np.hstack([zeros, np.cumsum(mod, axis=1)]).tolist()
        self.mod2_prefix = np.hstack([zeros, np.cumsum(mod2, axis=1)]).tolist()
        self.schur = np.cumsum(h.diagonal).tolist()

    def theorem2(self, r: int, t: int) -> BoundValue:
        t0 = t - 1
        d, ap, mod = self.d, self.abs_prefix, self.mod
        # Gershgorin lower end of the principal submatrix on rows {1..r, t}
        low = d[t0] - ap[t0][r]
        for i in range(r):
            low = min(low, d[i] - (ap[i][r] + mod[i][t0]))
        denom = d[t0] - low
        schur = self.schur[r - 1]
        if denom <= DEGENERACY_EPS:
            return BoundValue(schur, Source.THEOREM2, r, t, degenerate=True, denominator=denom)
        value = schur - self.mod2_prefix[t0][r] / denom
        return BoundValue(value, Source.THEOREM2, r, t, denominator=denom)

    def theorem3(self, r: int, k: int, t: int) -> BoundValue:
        diff = self.d[t - 1] - self.d[k - 1]
        return BoundValue(
            self.schur[r - 1] - _upper_excess(diff, self.mod2[t - 1][k - 1]),
            Source.THEOREM3,
            r,
            t,
            k,
        )


def _upper_excess(diff: float, b2: float) -> float:
    """``(sqrt(diff**2 + 4*b2) - diff) / 2`` for ``diff >= 0``, without cancellation."""
    if b2 == 0.0:
        return 0.0
    return 2.0 * b2 / (math.sqrt(diff * diff + 4.0 * b2) + diff)


def _check_rt(n: int, r: int, t: int):
    if not 1 <= r <= n - 1:
        raise InvalidIndices(f"r = {r} not within 1..{n - 1}")
    if not r < t <= n:
        raise InvalidIndices(f"t = {t} not within {r + 1}..{n}")


def schur_bounds(h: HermitianMatrix) -> np.ndarray:
    """Partial sums of the ascending diagonal; the last entry is the trace."""
    _require_canonical(h)
    return np.cumsum(h.diagonal)


def gershgorin_interval(h: HermitianMatrix) -> tuple[float, float]:
    """``(min_i (a_ii - r_i), max_i (a_ii + r_i))``, which contains the spectrum."""
    rq = row_quantities(h)
    d = h.diagonal
    return float(np.min(d - rq.r)), float(np.max(d + rq.r))


def theorem1_lambda_min_upper(h: HermitianMatrix) -> BoundValue:
    """Upper bound ``a_11 - q_1 / (max_i (a_ii + r_i) - a_11)`` on the smallest eigenvalue."""
    _require_canonical(h)
    rq = row_quantities(h)
    d = h.diagonal
    a11 = float(d[0])
    denom = float(np.max(d + rq.r)) - a11
    if denom <= DEGENERACY_EPS:
        return BoundValue(a11, Source.THEOREM1_LOW, degenerate=True, denominator=denom)
    return BoundValue(a11 - float(rq.q[0]) / denom, Source.THEOREM1_LOW, denominator=denom)


def theorem1_lambda_max_lower(h: HermitianMatrix) -> BoundValue:
    """Lower bound ``a_nn + q_n / (a_nn - min_i (a_ii - r_i))`` on the largest eigenvalue."""
    _require_canonical(h)
    rq = row_quantities(h)
    d = h.diagonal
    ann = float(d[-1])
    denom = ann - float(np.min(d - rq.r))
    if denom <= DEGENERACY_EPS:
        return BoundValue(ann, Source.THEOREM1_HIGH, degenerate=True, denominator=denom)
    return BoundValue(ann + float(rq.q[-1]) / denom, Source.THEOREM1_HIGH, denominator=denom)


def theorem2_bound(h: HermitianMatrix, r: int, t: int) -> BoundValue:
    """Sharpened bound built from the principal submatrix on rows ``{1, ..., r, t}``.

    The correction is ``sum_{s<=r} |a_ts|**2 / D`` with ``D = a_tt - m`` and
    ``m`` the Gershgorin lower end of that submatrix (row sums taken inside
    the submatrix only).
    """
    _require_canonical(h)
    _check_rt(h.n, r, t)
    return _Tables(h).theorem2(r, t)


def theorem3_bound(h: HermitianMatrix, r: int, k: int, t: int) -> BoundValue:
    """Sharpened bound using the 2x2 principal submatrix on rows ``{k, t}``."""
    _require_canonical(h)
    _check_rt(h.n, r, t)
    if not 1 <= k <= r:
        raise InvalidIndices(f"k = {k} not within 1..{r}")
    return _Tables(h).theorem3(r, k, t)


def two_by_two_extremes(a: float, d: float, b: complex) -> tuple[float, float]:
    """Eigenvalues of ``[[a, b], [conj(b), d]]`` as ``(lo, hi)``."""
    mid = 0.5 * (a + d)
    half = math.hypot(0.5 * (a - d), abs(complex(b)))
    return mid - half, mid + half


def best_bounds(h: HermitianMatrix) -> BoundReport:
    """Evaluate every bound and keep the smallest per ``r``.

    Ties go to the Schur bound, then to Theorem 2, then Theorem 3, then to
    the smallest ``(t, k)``.  Degenerate Theorem 2 bounds are skipped.
    """
    _require_canonical(h)
    n = h.n
    tab = _Tables(h)
    schur = np.asarray(tab.schur)
    best: list[BoundValue] = []
    candidates: list[BoundValue] = []
    for r in range(1, n):
        win = BoundValue(tab.schur[r - 1], Source.SCHUR, r)
        t2 = [tab.theorem2(r, t) for t in range(r + 1, n + 1)]
        t3 = [tab.theorem3(r, k, t) for t in range(r + 1, n + 1) for k in range(1, r + 1)]
        for c in t2 + t3:
            if not c.degenerate and c.value < win.value:
                win = c
        best.append(win)
        candidates.extend(t2)
        candidates.extend(t3)
    return BoundReport(
        n=n,
        schur=schur,
        per_r_best=best,
        lambda_min_upper=theorem1_lambda_min_upper(h),
        lambda_max_lower=theorem1_lambda_max_lower(h),
        gershgorin=gershgorin_interval(h),
        permutation=h.permutation,
        candidates=candidates,
    )
