"""Command line front end.

Exit codes: 0 success, 1 internal error, 2 bad input, 3 a bound or reference
value check failed, 4 the eigenvalue oracle did not converge.
"""

from __future__ import annotations

import argparse
import sys
from datetime import datetime, timezone

from . import reference
from .bounds import Source, theorem2_bound, theorem3_bound
from .errors import EmptyMatrix, MatrixFormatError, NoConvergence, NonFinite, NotHermitian
from .hermitian import DEFAULT_HERMITIAN_TOL, validate_hermitian
from .matrixio import matrix_to_json, read_matrix
from .oracle import DEFAULT_MAX_SWEEPS, DEFAULT_ORACLE_TOL
from .report import analyze, dumps, render_text, run_to_dict
from .sampling import make_rng, random_hermitian
from .verify import DEFAULT_VERIFY_TOL

EXIT_OK, EXIT_INTERNAL, EXIT_INPUT, EXIT_FAILED, EXIT_NO_CONVERGENCE = 0, 1, 2, 3, 4
EXAMPLE_TOL = 1e-12

INPUT_ERRORS = (MatrixFormatError, NonFinite, NotHermitian, EmptyMatrix, OSError)


def _positive_float(text):
    x = float(text)
    if not x > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return x


def _nonneg_float(text):
    x = float(text)
    if not x >= 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative, got {text}")
    return x


def _positive_int(text):
    x = int(text)
    if x < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {text}")
    return x


def _add_tolerances(p, verify=True):
    p.add_argument("--tol-hermitian", type=_nonneg_float, default=DEFAULT_HERMITIAN_TOL)
    if verify:
        p.add_argument("--tol-verify", type=_positive_float, default=DEFAULT_VERIFY_TOL)
        p.add_argument("--tol-oracle", type=_positive_float, default=DEFAULT_ORACLE_TOL)
        p.add_argument("--max-sweeps", type=_positive_int, default=DEFAULT_MAX_SWEEPS)
    p.add_argument("--output", choices=("text", "json"), default="text")


def _add_input(p):
    p.add_argument("-i", "--input", required=True, help="matrix file (.json, .mtx)")
    p.add_argument("--format", choices=("json", "mm"), default=None, help="default: infer from extension")
    p.add_argument("--timestamp", action="store_true", help="record the UTC time of the run")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="schurbounds", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="compute all bounds for a matrix")
    _add_input(p)
    _add_tolerances(p, verify=False)

    p = sub.add_parser("verify", help="compute bounds and check them against the Jacobi oracle")
    _add_input(p)
    _add_tolerances(p)
    p.add_argument("--exhaustive", action="store_true", help="check every (t, k) candidate, not just the best")

    p = sub.add_parser("random", help="verify bounds on seeded random Hermitian matrices")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--scale", type=_positive_float, default=1.0)
    p.add_argument("--count", type=_positive_int, default=1)
    p.add_argument("--real", action="store_true", help="real symmetric instead of complex Hermitian")
    _add_tolerances(p)

    p = sub.add_parser("example", help="replay a built-in reference matrix")
    p.add_argument("name", choices=sorted(reference.MATRICES))
    _add_tolerances(p)
    return parser


def _emit(run, output):
    sys.stdout.write(dumps(run_to_dict(run)) + "\n" if output == "json" else render_text(run))


def _now():
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def cmd_analyze(args) -> int:
    raw = read_matrix(args.input, args.format)
    run = analyze(raw, args.input, args.tol_hermitian, timestamp=_now() if args.timestamp else None)
    _emit(run, args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    raw = read_matrix(args.input, args.format)
    run = analyze(
        raw, args.input, args.tol_hermitian, verify=True,
        tol_oracle=args.tol_oracle, tol_verify=args.tol_verify, max_sweeps=args.max_sweeps,
        exhaustive=args.exhaustive, timestamp=_now() if args.timestamp else None,
    )
    _emit(run, args.output)
    return EXIT_OK if run.all_hold else EXIT_FAILED


def cmd_random(args) -> int:
    rng = make_rng(args.seed)
    passed = 0
    records = []
    for i in range(1, args.count + 1):
        raw = random_hermitian(rng, args.n, args.scale, complex_entries=not args.real)
        run = analyze(
            raw, f"random[{i}]", args.tol_hermitian, verify=True,
            tol_oracle=args.tol_oracle, tol_verify=args.tol_verify,
            max_sweeps=args.max_sweeps, exhaustive=True,
        )
        ok = run.all_hold
        passed += ok
        min_gap = min(v.gap for v in run.verdicts)
        if args.output == "json":
            records.append({
                "index": i,
                "matrix": matrix_to_json(raw),
                "passed": ok,
                "min_gap": min_gap,
                "failures": len(run.failures),
            })
        else:
            sys.stdout.write(f"matrix {i}: {'pass' if ok else 'FAIL'} "
                             f"({len(run.verdicts)} verdicts, min gap {min_gap:.6e})\n")
    summary = f"{passed}/{args.count} passed"
    if args.output == "json":
        doc = {"n": args.n, "seed": args.seed, "scale": args.scale, "count": args.count,
               "passed": passed, "matrices": records, "summary": summary}
        sys.stdout.write(dumps(doc) + "\n")
    else:
        sys.stdout.write(summary + "\n")
    return EXIT_OK if passed == args.count else EXIT_FAILED


def cmd_example(args) -> int:
    h = validate_hermitian(reference.MATRICES[args.name], args.tol_hermitian)
    want2, want3 = reference.EXPECTED[args.name]
    got2 = theorem2_bound(h, 2, 3).value
    got3 = min(theorem3_bound(h, 2, k, 3).value for k in (1, 2))
    run = analyze(
        h, args.name, args.tol_hermitian, verify=True,
        tol_oracle=args.tol_oracle, tol_verify=args.tol_verify, max_sweeps=args.max_sweeps,
        exhaustive=True,
    )
    checks = [
        (f"{Source.THEOREM2.value}(r=2, t=3)", got2, want2),
        (f"min_k {Source.THEOREM3.value}(r=2, k, t=3)", got3, want3),
    ]
    ok = run.all_hold
    for label, got, want in checks:
        match = abs(got - want) <= EXAMPLE_TOL
        ok &= match
        run.notes.append(f"{label} = {got!r}, expected {want!r}: {'match' if match else 'MISMATCH'}")
    _emit(run, args.output)
    return EXIT_OK if ok else EXIT_FAILED


COMMANDS = {"analyze": cmd_analyze, "verify": cmd_verify, "random": cmd_random, "example": cmd_example}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NoConvergence as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_CONVERGENCE
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
