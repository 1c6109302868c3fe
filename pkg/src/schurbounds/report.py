"""Bundling an analysis run and rendering it as JSON or text."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .bounds import BoundReport, BoundValue, Source, best_bounds
from .hermitian import DEFAULT_HERMITIAN_TOL, HermitianMatrix, validate_hermitian
from .oracle import DEFAULT_MAX_SWEEPS, DEFAULT_ORACLE_TOL, Spectrum, jacobi_eigenvalues
from .verify import (
    DEFAULT_VERIFY_TOL,
    BhatiaDavisDiagnostic,
    Verdict,
    bhatia_davis_diagnostic,
    verify_bounds,
)


@dataclass
class AnalysisRun:
    input: str
    tolerances: dict
    matrix: HermitianMatrix
    report: BoundReport
    spectrum: Spectrum | None = None
    verdicts: list[Verdict] | None = None
    bhatia_davis: BhatiaDavisDiagnostic | None = None
    timestamp: str | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def verified(self) -> bool:
        return self.verdicts is not None

    @property
    def all_hold(self) -> bool:
        return self.verdicts is not None and all(v.holds for v in self.verdicts)

    @property
    def failures(self) -> list[Verdict]:
        return [v for v in self.verdicts or [] if not v.holds]


def analyze(
    raw,
    input: str = "<array>",
    tol_hermitian: float = DEFAULT_HERMITIAN_TOL,
    verify: bool = False,
    tol_oracle: float = DEFAULT_ORACLE_TOL,
    tol_verify: float = DEFAULT_VERIFY_TOL,
    max_sweeps: int = DEFAULT_MAX_SWEEPS,
    exhaustive: bool = False,
    timestamp: str | None = None,
) -> AnalysisRun:
    """Validate ``raw``, compute every bound and optionally check them against the oracle."""
    h = raw if isinstance(raw, HermitianMatrix) else validate_hermitian(raw, tol_hermitian)
    tolerances = {"hermitian": tol_hermitian}
    run = AnalysisRun(input, tolerances, h, best_bounds(h), timestamp=timestamp)
    if run.report.all_corrections_zero:
        run.notes.append("all corrections zero")
    if verify:
        tolerances.update(oracle=tol_oracle, verify=tol_verify)
        run.spectrum = jacobi_eigenvalues(h, tol_oracle, max_sweeps)
        run.verdicts = verify_bounds(h, run.report, run.spectrum, tol_verify, exhaustive=exhaustive)
        run.bhatia_davis = bhatia_davis_diagnostic(h, run.spectrum)
        if run.bhatia_davis.min_slack < -tol_verify:
            run.notes.append("Bhatia-Davis slack negative")
    return run


def _bound_dict(b: BoundValue) -> dict:
    return {
        "r": b.r,
        "value": b.value,
        "source": b.source.value,
        "t": b.t,
        "k": b.k,
        "degenerate": b.degenerate,
    }


def _verdict_dict(v: Verdict) -> dict:
    return {
        "source": v.source.value,
        "r": v.r,
        "t": v.t,
        "k": v.k,
        "bound": v.bound,
        "true_value": v.true_value,
        "gap": v.gap,
        "holds": v.holds,
    }


def run_to_dict(run: AnalysisRun) -> dict:
    rep = run.report
    out = {
        "input": run.input,
        "n": rep.n,
        "tolerances": dict(run.tolerances),
        "permutation": list(rep.permutation),
        "schur": [float(x) for x in rep.schur],
        "bounds": [_bound_dict(b) for b in rep.per_r_best],
        "lambda_min_upper": {"value": rep.lambda_min_upper.value, "degenerate": rep.lambda_min_upper.degenerate},
        "lambda_max_lower": {"value": rep.lambda_max_lower.value, "degenerate": rep.lambda_max_lower.degenerate},
        "gershgorin": list(rep.gershgorin),
        "notes": list(run.notes),
    }
    if run.verified:
        out["spectrum"] = {
            "values": [float(x) for x in run.spectrum.values],
            "sweeps_used": run.spectrum.sweeps_used,
            "offdiag_norm_final": run.spectrum.offdiag_norm_final,
        }
        out["verdicts"] = [_verdict_dict(v) for v in run.verdicts]
        out["bhatia_davis"] = [
            {"i": i, "variance": t.variance, "envelope": t.envelope, "slack": t.slack}
            for i, t in enumerate(run.bhatia_davis.per_i, 1)
        ]
        out["all_hold"] = run.all_hold
    if run.timestamp is not None:
        out["timestamp"] = run.timestamp
    return out


def _fmt_float(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError(f"refusing to serialize non-finite number {x!r}")
    s = format(x, ".17g")
    if not any(c in s for c in ".e"):
        s += ".0"
    return s


def dumps(obj, indent: int = 2, _level: int = 0) -> str:
    """JSON text with every float written to 17 significant digits.

    Deterministic for a given object; ``dumps(json.loads(dumps(x)))`` returns
    the same text.
    """
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if isinstance(obj, float):
        return _fmt_float(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {dumps(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in obj):
            return "[" + ", ".join(dumps(x) for x in obj) + "]"
        items = [pad + dumps(x, indent, _level + 1) for x in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    return json.dumps(obj)


def _g(x: float) -> str:
    return format(x, ".12g")


def render_text(run: AnalysisRun) -> str:
    rep = run.report
    lines = [f"input: {run.input} (n = {rep.n})"]
    if run.timestamp is not None:
        lines.append(f"timestamp: {run.timestamp}")
    lines.append("permutation: " + " ".join(str(p) for p in rep.permutation))
    lines.append("schur partial sums: " + " ".join(_g(x) for x in rep.schur))
    lines.append(f"gershgorin interval: [{_g(rep.gershgorin[0])}, {_g(rep.gershgorin[1])}]")
    for label, b, rel in (("lambda_min", rep.lambda_min_upper, "<="), ("lambda_max", rep.lambda_max_lower, ">=")):
        tag = " (degenerate)" if b.degenerate else ""
        lines.append(f"{label} {rel} {_g(b.value)}  [{b.source.value}]{tag}")
    if rep.n > 1:
        lines.append(f"{'r':>3}  {'best bound':>20}  {'schur':>20}  source")
        for b in rep.per_r_best:
            params = ""
            if b.source is Source.THEOREM2:
                params = f"(t={b.t})"
            elif b.source is Source.THEOREM3:
                params = f"(k={b.k}, t={b.t})"
            lines.append(f"{b.r:>3}  {_g(b.value):>20}  {_g(float(rep.schur[b.r - 1])):>20}  {b.source.value}{params}")
    for note in run.notes:
        lines.append(f"note: {note}")
    if run.verified:
        lines.append("spectrum: " + " ".join(_g(x) for x in run.spectrum.values)
                     + f"  ({run.spectrum.sweeps_used} sweeps)")
        bad = run.failures
        lines.append(f"verdicts: {len(run.verdicts) - len(bad)}/{len(run.verdicts)} hold, "
                     f"min Bhatia-Davis slack {_g(run.bhatia_davis.min_slack)}")
        for v in bad:
            lines.append(f"FAILED {v.source.value} r={v.r} t={v.t} k={v.k}: bound {_g(v.bound)}, "
                         f"true {_g(v.true_value)}, gap {v.gap:.3e}")
    return "\n".join(lines) + "\n"
