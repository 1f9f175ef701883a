"""Command-line interface.

Subcommands:

* trace-bound: bound trace over a theta grid, optionally sampled and
  with extra fixed-xi frontier curves.
* classify: region membership of one or many correlation quadruples.
* simulate: a single (theta, branch, epsilon) point.
* scan: random-state CHSH extrema against the analytical bounds.
* eigen-check: eigenvalue oracle versus the closed-form bound.

All commands emit CSV (default) or JSON, to stdout or --out, with
floats at 12 significant digits; identical invocations produce
identical bytes.  Angles are read in radians unless --degrees is
given, and are always written in radians.  Exit codes: 0 success,
1 numerical failure, 2 invalid arguments.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

from .bounds import frontier_state, quantum_bound
from .errors import EntryRangeError, EpsilonRangeError, ThetaRangeError
from .experiment import ShotPlan, random_scan, run_point, trace_bound
from .linalg import RngStream, hermitian_eigen_extrema
from .membership import arcsin_combination, chsh_combination, classify
from .observables import chsh_operator, chsh_value, make_settings
from .reporting import ANALYTIC_FIELDS, TRACE_FIELDS, record_row, render_csv, render_json

EIGEN_CHECK_TOL = 1e-9


class _UsageError(Exception):
    """Invalid command-line input detected after parsing."""


def _emit(args, fieldnames: list[str], rows: list[dict]) -> None:
    text = render_csv(fieldnames, rows) if args.format == "csv" else render_json(fieldnames, rows)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _angle(value: float, degrees: bool) -> float:
    return math.radians(value) if degrees else float(value)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise _UsageError(message)


def cmd_trace_bound(args) -> int:
    _require(args.points >= 2, "--points must be at least 2")
    _require(args.shots >= 0, "--shots must be non-negative")
    _require(args.seed >= 0, "--seed must be non-negative")
    plan = ShotPlan(args.shots, args.seed) if args.shots > 0 else None
    records = trace_bound(args.points, args.branch, args.epsilon, plan)

    fields = list(TRACE_FIELDS if plan else ANALYTIC_FIELDS)
    rows = []
    fixed_xi = [_angle(x, args.degrees) for x in (args.xi or [])]
    xi_fields = [f"chsh_xi_{i}" for i in range(len(fixed_xi))]
    fields += xi_fields
    curve_states = [frontier_state(x) for x in fixed_xi]
    curves: dict[str, list[float]] = {name: [] for name in xi_fields}
    for record in records:
        row = record_row(record)
        settings = make_settings(record.theta)
        for name, state in zip(xi_fields, curve_states):
            value = chsh_value(settings, state)
            row[name] = value
            curves[name].append(value)
        rows.append(row)
    _emit(args, fields, rows)

    if args.plot:
        from .plotting import plot_bound_trace

        labels = {
            f"xi = {xi:.4g}": curves[name] for name, xi in zip(xi_fields, fixed_xi)
        }
        plot_bound_trace(records, args.plot, fixed_xi_curves=labels or None)
    return 0


def _parse_quadruples(args) -> list[tuple[float, float, float, float]]:
    if args.file is not None:
        _require(not args.values, "give either four values or --file, not both")
        quads = []
        path = Path(args.file)
        _require(path.is_file(), f"no such file: {args.file}")
        for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
            parts = line.split()
            if not parts:
                continue
            _require(len(parts) == 4, f"line {lineno}: expected 4 values, got {len(parts)}")
            try:
                quads.append(tuple(float(p) for p in parts))
            except ValueError:
                raise _UsageError(f"line {lineno}: could not parse {line.strip()!r}") from None
        _require(bool(quads), f"{args.file} contains no quadruples")
        return quads
    _require(len(args.values) == 4, "exactly four correlation values are required")
    return [tuple(args.values)]


def cmd_classify(args) -> int:
    fields = ["x0", "x1", "x2", "x3", "label"]
    fields += [f"chsh_{i}" for i in range(4)] + [f"arcsin_{i}" for i in range(4)]
    rows = []
    for quad in _parse_quadruples(args):
        row = dict(zip(("x0", "x1", "x2", "x3"), quad))
        row["label"] = classify(quad).value
        for i in range(4):
            row[f"chsh_{i}"] = chsh_combination(quad, i)
            row[f"arcsin_{i}"] = arcsin_combination(quad, i)
        rows.append(row)
    _emit(args, fields, rows)
    return 0


def cmd_simulate(args) -> int:
    _require(args.shots >= 0, "--shots must be non-negative")
    _require(args.seed >= 0, "--seed must be non-negative")
    theta = _angle(args.theta, args.degrees)
    plan = ShotPlan(args.shots, args.seed) if args.shots > 0 else None
    record = run_point(theta, args.branch, args.epsilon, plan)
    fields = TRACE_FIELDS if plan else ANALYTIC_FIELDS
    _emit(args, list(fields), [record_row(record)])
    return 0


def cmd_scan(args) -> int:
    _require(args.states >= 1, "--states must be at least 1")
    _require(args.seed >= 0, "--seed must be non-negative")
    if args.theta is not None:
        thetas = [_angle(args.theta, args.degrees)]
    else:
        points = args.points if args.points is not None else 19
        _require(points >= 2, "--points must be at least 2")
        thetas = [i * math.pi / (points - 1) for i in range(points)]
    fields = ["theta", "bound_lower", "bound_upper", "scan_min", "scan_max", "gap"]
    rows = []
    for node, theta in enumerate(thetas):
        bound = quantum_bound(theta)
        result = random_scan(theta, args.states, args.mix, RngStream(args.seed, node))
        rows.append(
            {
                "theta": theta,
                "bound_lower": bound.lower,
                "bound_upper": bound.upper,
                "scan_min": result.minimum,
                "scan_max": result.maximum,
                "gap": bound.upper - result.maximum,
            }
        )
    _emit(args, fields, rows)
    if args.plot:
        from .plotting import plot_scan

        plot_scan(rows, args.plot)
    return 0


def cmd_eigen_check(args) -> int:
    _require(args.points >= 2, "--points must be at least 2")
    fields = ["theta", "bound_upper", "eigen_max", "abs_diff"]
    rows = []
    worst = 0.0
    for i in range(args.points):
        theta = i * math.pi / (args.points - 1)
        upper = quantum_bound(theta).upper
        _, eigen_max = hermitian_eigen_extrema(chsh_operator(make_settings(theta)).matrix)
        diff = abs(eigen_max - upper)
        worst = max(worst, diff)
        rows.append(
            {"theta": theta, "bound_upper": upper, "eigen_max": eigen_max, "abs_diff": diff}
        )
    _emit(args, fields, rows)
    if worst > EIGEN_CHECK_TOL:
        print(f"eigen-check failed: max |difference| {worst:.3e} > {EIGEN_CHECK_TOL:g}", file=sys.stderr)
        return 1
    return 0


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv", help="output format")
    common.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
    common.add_argument(
        "--degrees", action="store_true", help="interpret input angles as degrees (output stays in radians)"
    )

    parser = argparse.ArgumentParser(
        prog="qcbounds",
        description="Two-qubit CHSH bounds, membership tests and experiment simulation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("trace-bound", parents=[common], help="bound trace over a theta grid")
    p.add_argument("--points", type=int, default=181, help="theta grid size over [0, pi] (default 181)")
    p.add_argument("--branch", choices=("upper", "lower"), default="upper", help="frontier branch to prepare")
    p.add_argument("--epsilon", type=float, default=0.0, help="white-noise fraction of the source")
    p.add_argument("--shots", type=int, default=0, help="shots per observable pair; 0 = analytical only")
    p.add_argument("--seed", type=int, default=0, help="master seed for sampling")
    p.add_argument("--xi", type=float, action="append", help="extra fixed-xi frontier curve (repeatable)")
    p.add_argument("--plot", metavar="PATH", help="also render the trace as a figure to PATH")
    p.set_defaults(func=cmd_trace_bound)

    p = sub.add_parser("classify", parents=[common], help="classify correlation quadruples")
    p.add_argument("values", type=float, nargs="*", help="four correlations <AB> <Ab> <aB> <ab>")
    p.add_argument("--file", metavar="PATH", help="read one whitespace-separated quadruple per line")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("simulate", parents=[common], help="simulate a single point")
    p.add_argument("--theta", type=float, required=True, help="working angle in [0, pi]")
    p.add_argument("--branch", choices=("upper", "lower"), default="upper", help="frontier branch to prepare")
    p.add_argument("--epsilon", type=float, default=0.0, help="white-noise fraction of the source")
    p.add_argument("--shots", type=int, default=10000, help="shots per observable pair; 0 = analytical only")
    p.add_argument("--seed", type=int, default=0, help="master seed for sampling")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("scan", parents=[common], help="random-state extrema vs the analytical bounds")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--theta", type=float, help="scan a single working angle")
    group.add_argument("--points", type=int, help="scan a uniform theta grid of this size (default 19)")
    p.add_argument("--states", type=int, default=10000, help="random states per angle (default 10000)")
    p.add_argument("--mix", choices=("pure", "mixed", "both"), default="pure", help="state ensemble")
    p.add_argument("--seed", type=int, default=0, help="master seed; angle i uses stream i")
    p.add_argument("--plot", metavar="PATH", help="also render the scan as a figure to PATH")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("eigen-check", parents=[common], help="eigenvalue oracle vs the closed-form bound")
    p.add_argument("--points", type=int, default=181, help="theta grid size over [0, pi] (default 181)")
    p.set_defaults(func=cmd_eigen_check)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (_UsageError, ThetaRangeError, EpsilonRangeError, EntryRangeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # numerical or internal failure
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
