"""Command-line front end: integrate, benchmark, bound, sample, constants.

Exit statuses: 0 success, 2 usage error, 3 quadrature convergence failure,
4 I/O failure.  All file output is CSV (comma separated, LF line endings,
header row, shortest round-trip float formatting) and is written in a single
operation so that failures never leave a partial file behind.
"""

from __future__ import annotations

import argparse
import io
import math
import sys
from typing import Sequence

from . import analysis
from .approx import MethodKind, sample_functions
from .quadrature import ConvergenceError, Interval, adaptive_simpson, cos_cos, periodic_oracle
from .special import derive_constants

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CONVERGENCE = 3
EXIT_IO = 4

_METHODS = {
    "c1": MethodKind.C1,
    "c2": MethodKind.C2,
    "simpson": MethodKind.ADAPTIVE_SIMPSON,
    "oracle": MethodKind.PERIODIC_ORACLE,
}

BENCHMARK_CSV_HEADER = (
    "bounds_lo,bounds_hi,n_trials,mean_err_c1,mean_err_c2,"
    "mean_time_c1_s,mean_time_c2_s,mean_time_ref_s"
)
SAMPLE_CSV_HEADER = "x,cos_cos_x,dC1_approx,c1,c2,linear"


def _write_csv(path: str, header: str, rows: list[tuple]) -> None:
    buf = io.StringIO()
    buf.write(header)
    buf.write("\n")
    for row in rows:
        buf.write(",".join(repr(v) if isinstance(v, float) else str(v) for v in row))
        buf.write("\n")
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(buf.getvalue())


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coscos",
        description="Closed-form approximations of the integral of cos(cos(x)), "
        "with reference quadrature and a benchmark harness.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_int = sub.add_parser("integrate", help="definite integral over [lo, hi]")
    p_int.add_argument("lo", type=float)
    p_int.add_argument("hi", type=float)
    p_int.add_argument("--method", choices=sorted(_METHODS), required=True)
    p_int.add_argument("--tol", type=float, default=1e-10,
                       help="tolerance for the quadrature methods (default 1e-10)")

    p_bench = sub.add_parser("benchmark", help="random-interval error/timing table")
    p_bench.add_argument("--bounds", type=float, nargs=2, action="append",
                         metavar=("LO", "HI"),
                         help="outer bounds pair; repeatable (default: the six "
                         "pairs [-1,1] ... [-100,100])")
    p_bench.add_argument("--trials", type=int, default=50)
    p_bench.add_argument("--seed", type=int, default=42)
    p_bench.add_argument("--tol-ref", type=float, default=1e-10,
                         help="oracle tolerance for error columns")
    p_bench.add_argument("--tol-time", type=float, default=1e-6,
                         help="adaptive Simpson tolerance for the timed reference")
    p_bench.add_argument("--out", required=True, help="output CSV path")

    sub.add_parser("bound", help="worst-case error bound check")

    p_sample = sub.add_parser("sample", help="tabulate the functions to CSV")
    p_sample.add_argument("lo", type=float)
    p_sample.add_argument("hi", type=float)
    p_sample.add_argument("--n", type=int, required=True, help="number of rows (>= 2)")
    p_sample.add_argument("--out", required=True, help="output CSV path")

    sub.add_parser("constants", help="print the derived constant set")
    return parser


def _cmd_integrate(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if not (math.isfinite(args.lo) and math.isfinite(args.hi)):
        parser.error(f"bounds must be finite, got {args.lo!r} {args.hi!r}")
    if args.lo > args.hi:
        parser.error(f"need lo <= hi, got {args.lo!r} > {args.hi!r}")
    if not args.tol > 0.0:
        parser.error(f"--tol must be positive, got {args.tol!r}")
    method = _METHODS[args.method]
    iv = Interval(args.lo, args.hi)
    if method is MethodKind.ADAPTIVE_SIMPSON:
        result = adaptive_simpson(cos_cos, iv, args.tol)
        print(f"value={result.value!r}")
        print(f"error_estimate={result.error_estimate!r}")
        print(f"evaluations={result.evaluations}")
    elif method is MethodKind.PERIODIC_ORACLE:
        print(f"value={periodic_oracle(iv, args.tol)!r}")
    else:
        c = derive_constants()
        print(f"value={analysis.definite_integral(iv, method, c, args.tol)!r}")
    return EXIT_OK


def _cmd_benchmark(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.trials < 1:
        parser.error(f"--trials must be >= 1, got {args.trials}")
    if not (args.tol_ref > 0.0 and args.tol_time > 0.0):
        parser.error("tolerances must be positive")
    if args.bounds:
        try:
            bounds = [Interval(lo, hi) for lo, hi in args.bounds]
        except ValueError as exc:
            parser.error(str(exc))
    else:
        bounds = list(analysis.DEFAULT_BENCHMARK_BOUNDS)
    rows = analysis.run_benchmark(bounds, args.trials, args.seed,
                                  args.tol_ref, args.tol_time)
    csv_rows = [
        (r.bounds.lo, r.bounds.hi, r.n_trials, r.mean_error_c1, r.mean_error_c2,
         r.mean_time_c1, r.mean_time_c2, r.mean_time_ref)
        for r in rows
    ]
    _write_csv(args.out, BENCHMARK_CSV_HEADER, csv_rows)
    print(f"wrote {len(csv_rows)} rows to {args.out}")
    return EXIT_OK


def _cmd_bound() -> int:
    c = derive_constants()
    analytic = analysis.analytic_error_bound(c)
    measured = analysis.worst_case_error(range(-4, 5), c, tol=1e-10)
    print(f"analytic_bound={analytic!r}")
    print(f"measured_worst_case={measured!r}")
    print(f"measured<=analytic: {'PASS' if measured <= analytic else 'FAIL'}")
    print(f"analytic<=9.6e-4: {'PASS' if analytic <= 9.6e-4 else 'FAIL'}")
    return EXIT_OK


def _cmd_sample(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    try:
        rows = sample_functions(args.lo, args.hi, args.n)
    except ValueError as exc:
        parser.error(str(exc))
    _write_csv(args.out, SAMPLE_CSV_HEADER, [tuple(r) for r in rows])
    print(f"wrote {len(rows)} rows to {args.out}")
    return EXIT_OK


def _cmd_constants() -> int:
    c = derive_constants()
    for name in ("sin1", "cos1", "j0_1", "k_a", "k_b", "k"):
        print(f"{name}={getattr(c, name)!r}")
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "integrate":
            return _cmd_integrate(args, parser)
        if args.command == "benchmark":
            return _cmd_benchmark(args, parser)
        if args.command == "bound":
            return _cmd_bound()
        if args.command == "sample":
            return _cmd_sample(args, parser)
        if args.command == "constants":
            return _cmd_constants()
        parser.error(f"unknown command {args.command!r}")
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
