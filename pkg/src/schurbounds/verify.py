"""Check computed bounds against the Jacobi spectrum."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bounds import BoundReport, BoundValue, Source
from .errors import DimensionMismatch, EmptyInput
from .hermitian import HermitianMatrix, row_quantities
from .oracle import Spectrum

DEFAULT_VERIFY_TOL = 1e-8


@dataclass(frozen=True)
class Verdict:
    """Outcome of checking one bound.

    ``gap`` is oriented so that a valid bound always has ``gap >= 0``: it is
    ``bound - true_value`` for upper bounds and ``true_value - bound`` for the
    two lower bounds (largest eigenvalue, Gershgorin lower end).
    """

    source: Source
    r: int
    bound: float
    true_value: float
    gap: float
    holds: bool
    t: int | None = None
    k: int | None = None
    degenerate: bool = False

    def sort_key(self):
        return (self.r, self.source.rank, self.t or 0, self.k or 0)


@dataclass(frozen=True)
class BhatiaDavisTerm:
    variance: float
    envelope: float
    slack: float


@dataclass(frozen=True)
class BhatiaDavisDiagnostic:
    """Per diagonal index ``i``: ``q_i <= (lambda_n - a_ii)(a_ii - lambda_1)``."""

    per_i: list[BhatiaDavisTerm]

    @property
    def min_slack(self) -> float:
        return min(term.slack for term in self.per_i)


@dataclass(frozen=True)
class GapStats:
    min_gap: float
    max_gap: float
    mean_gap: float
    count: int


def _verdict(source, r, bound, true_value, gap, tol, t=None, k=None, degenerate=False):
    return Verdict(source, r, float(bound), float(true_value), float(gap), bool(gap >= -tol), t, k, degenerate)


def _upper(b: BoundValue, true_value: float, tol: float) -> Verdict:
    return _verdict(b.source, b.r, b.value, true_value, b.value - true_value, tol, b.t, b.k, b.degenerate)


def verify_bounds(
    h: HermitianMatrix,
    report: BoundReport,
    s: Spectrum,
    verify_tol: float = DEFAULT_VERIFY_TOL,
    exhaustive: bool = False,
) -> list[Verdict]:
    """One verdict per bound in ``report``, sorted by ``(r, source, t, k)``.

    Covers the Schur bound for every ``r`` (``r = n`` is the trace identity),
    both single-eigenvalue bounds, both Gershgorin endpoints and the best
    bound per ``r``.  With ``exhaustive=True`` every Theorem 2 and Theorem 3
    candidate is checked instead of only the winners.
    """
    if verify_tol <= 0:
        raise ValueError("verify_tol must be positive")
    if not (h.n == report.n == s.n):
        raise DimensionMismatch(f"matrix n={h.n}, report n={report.n}, spectrum n={s.n}")
    n = h.n
    lam = s.values
    sums = np.cumsum(lam)
    out = []
    for r in range(1, n + 1):
        out.append(_upper(BoundValue(float(report.schur[r - 1]), Source.SCHUR, r), sums[r - 1], verify_tol))

    low = report.lambda_min_upper
    out.append(_verdict(low.source, 1, low.value, lam[0], low.value - lam[0], verify_tol, degenerate=low.degenerate))
    high = report.lambda_max_lower
    out.append(_verdict(high.source, n, high.value, lam[-1], lam[-1] - high.value, verify_tol, degenerate=high.degenerate))

    sharpened = report.candidates if exhaustive else [b for b in report.per_r_best if b.source is not Source.SCHUR]
    for b in sharpened:
        out.append(_upper(b, sums[b.r - 1], verify_tol))

    lo, hi = report.gershgorin
    out.append(_verdict(Source.GERSHGORIN_LOW, 1, lo, lam[0], lam[0] - lo, verify_tol))
    out.append(_verdict(Source.GERSHGORIN_HIGH, n, hi, lam[-1], hi - lam[-1], verify_tol))
    out.sort(key=Verdict.sort_key)
    return out


def bhatia_davis_diagnostic(h: HermitianMatrix, s: Spectrum) -> BhatiaDavisDiagnostic:
    """Variance ``q_i`` of the functional ``A -> a_ii`` against its spectral envelope."""
    if h.n != s.n:
        raise DimensionMismatch(f"matrix n={h.n}, spectrum n={s.n}")
    q = row_quantities(h).q
    lam_min, lam_max = float(s.values[0]), float(s.values[-1])
    terms = []
    for a_ii, var in zip(h.diagonal.tolist(), q.tolist()):
        env = (lam_max - a_ii) * (a_ii - lam_min)
        terms.append(BhatiaDavisTerm(var, env, env - var))
    return BhatiaDavisDiagnostic(terms)


def tightness_summary(verdicts, r: int | None = None) -> dict[Source, GapStats]:
    """Gap statistics grouped by source, optionally restricted to one ``r``."""
    groups: dict[Source, list[float]] = {}
    for v in verdicts:
        if r is None or v.r == r:
            groups.setdefault(v.source, []).append(v.gap)
    if not groups:
        raise EmptyInput("no verdicts to summarize")
    return {
        src: GapStats(min(g), max(g), sum(g) / len(g), len(g))
        for src, g in sorted(groups.items(), key=lambda kv: kv[0].rank)
    }
