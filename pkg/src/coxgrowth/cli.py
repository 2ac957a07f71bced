"""Command-line front end.

Subcommands: info, ball, stats, verify, series.  Every output is
deterministic: the same invocation produces byte-identical files.

Exit codes: 0 success, 2 unreadable input or output path, 3 invalid
matrix or flag value, 4 element cap exceeded, 5 a verification suite
failed on its validity range, 6 series coefficients disagree with the
enumerated sphere sizes.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path

from .ball import build_ball
from .coxmatrix import (
    diagram_properties,
    load_matrix,
    matrix_to_data,
    spherical_subsets,
)
from .errors import (
    ClassificationError,
    HypothesisError,
    MatrixError,
    NotUniformError,
    RangeEmptyError,
    ResourceLimitError,
)
from .geometry import (
    verify_exit_ascent,
    verify_not_both_down,
    verify_projection_collapse,
    verify_wall_pair_uniqueness,
)
from .series import (
    attach_ratio_window,
    finiteness_verdict,
    quotient_criterion,
    rational_growth_series,
    taylor_coefficients,
)
from .stats import (
    compute_stats,
    descent_ratio_floor,
    verify_descent_ratio,
    verify_descent_sum_lower,
    verify_growth_lower,
    verify_growth_upper,
    verify_two_descent_recursion,
    verify_up_edge_balance,
)

EXIT_OK = 0
EXIT_IO = 2
EXIT_VALIDATION = 3
EXIT_RESOURCE = 4
EXIT_VERIFY = 5
EXIT_COEFF = 6

def _run_descent_ratio(stats, gate):
    if stats.m is None:
        raise NotUniformError("descent ratio floor needs one uniform edge label")
    return verify_descent_ratio(stats, descent_ratio_floor(stats.n, stats.m), gate=gate)


# counting suites run on sphere statistics, geometry suites on the ball
_COUNTING_SUITES = {
    "L32": lambda stats, gate: verify_two_descent_recursion(stats, gate=gate),
    "L33": lambda stats, gate: verify_up_edge_balance(stats, gate=gate),
    "L34": lambda stats, gate: verify_growth_upper(stats, gate=gate),
    "L35": lambda stats, gate: verify_growth_lower(stats, gate=gate),
    "L45": lambda stats, gate: verify_descent_sum_lower(stats, gate=gate),
    "k-ratio": _run_descent_ratio,
}
_GEOMETRY_SUITES = {
    "P29": lambda ball, gate: verify_projection_collapse(ball, gate=gate),
    "C210": lambda ball, gate: verify_exit_ascent(ball, gate=gate),
    "L211": lambda ball, gate: verify_not_both_down(ball, gate=gate),
    "L24": lambda ball, gate: verify_wall_pair_uniqueness(ball, gate=gate),
}
_SUITE_ORDER = ["L32", "L33", "L34", "L35", "L45", "k-ratio",
                "P29", "C210", "L211", "L24"]


def _default_depth(rank: int) -> int:
    if rank <= 3:
        return 12
    if rank == 4:
        return 10
    return 8


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _dumps(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _load(args):
    matrix = load_matrix(args.matrix)
    depth = args.depth if args.depth is not None else _default_depth(matrix.rank)
    if depth < 0:
        raise ValueError(f"depth must be >= 0, got {depth}")
    if args.cap is not None and args.cap < 1:
        raise ValueError(f"cap must be >= 1, got {args.cap}")
    return matrix, depth


def cmd_info(args) -> int:
    matrix = load_matrix(args.matrix)
    props = diagram_properties(matrix)
    subsets = [
        {"gens": list(gens), "type": label.name, "order": label.order}
        for gens, label in spherical_subsets(matrix)
        if gens
    ]
    payload = {
        "matrix": matrix_to_data(matrix),
        "rank": matrix.rank,
        "two_spherical": props.two_spherical,
        "complete_diagram": props.complete_diagram,
        "uniform_label": props.uniform_label,
        "spherical_subsets": subsets,
    }
    _emit(_dumps(payload), args.out)
    return EXIT_OK


def cmd_ball(args) -> int:
    matrix, depth = _load(args)
    ball = build_ball(matrix, depth, cap=args.cap)
    lines = [json.dumps(rec, sort_keys=True) for rec in ball.export_records()]
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _stats_text(stats, fmt: str) -> str:
    rows = [
        {"i": i, "c": stats.c[i], "d": stats.d[i]} for i in range(stats.depth + 1)
    ]
    if fmt == "json":
        payload = {
            "matrix": matrix_to_data(stats.matrix),
            "depth": stats.depth,
            "table": rows,
        }
        return _dumps(payload)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["i", "c", "d"])
    for row in rows:
        writer.writerow([row["i"], row["c"], row["d"]])
    return buf.getvalue()


def cmd_stats(args) -> int:
    matrix, depth = _load(args)
    ball = build_ball(matrix, depth, cap=args.cap)
    stats = compute_stats(ball)
    _emit(_stats_text(stats, args.format), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    matrix, depth = _load(args)
    if args.suite is None:
        tokens = list(_SUITE_ORDER)
    else:
        tokens = [tok.strip() for tok in args.suite.split(",") if tok.strip()]
        unknown = [tok for tok in tokens if tok not in _SUITE_ORDER]
        if unknown:
            raise ValueError(
                f"unknown suite {unknown}; choose from {', '.join(_SUITE_ORDER)}"
            )
    ball = build_ball(matrix, depth, cap=args.cap)
    stats = compute_stats(ball)
    gate = not args.no_hypothesis_gate

    reports = []
    skipped = []
    lines = []
    for token in tokens:
        try:
            if token in _COUNTING_SUITES:
                report = _COUNTING_SUITES[token](stats, gate)
            else:
                report = _GEOMETRY_SUITES[token](ball, gate)
        except (HypothesisError, RangeEmptyError) as reason:
            kind = "hypothesis" if isinstance(reason, HypothesisError) else "range"
            skipped.append({"suite": token, "reason": str(reason), "kind": kind})
            lines.append(f"{token}: skipped ({kind}) - {reason}")
            continue
        reports.append(report)
        lines.append(report.summary())

    failed = [r for r in reports if not r.holds]
    payload = {
        "matrix": matrix_to_data(matrix),
        "depth": depth,
        "diagnostic": not gate,
        "suites": [r.to_dict() for r in reports],
        "skipped": skipped,
        "all_hold": not failed,
    }
    _emit(_dumps(payload), args.out)
    print("\n".join(lines), file=sys.stderr)
    if failed and gate:
        return EXIT_VERIFY
    return EXIT_OK


def _parse_points(text: str) -> list[Fraction]:
    points = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if chunk:
            points.append(Fraction(chunk))
    return points


def _default_points(rank: int) -> list[Fraction]:
    points = []
    for denom in (rank - 1, rank - 2):
        if denom >= 2:
            points.append(Fraction(1, denom))
    return points


def cmd_series(args) -> int:
    matrix, depth = _load(args)
    series = rational_growth_series(matrix)
    coeffs = taylor_coefficients(series, depth)
    ball = build_ball(matrix, depth, cap=args.cap)
    stats = compute_stats(ball)
    enumerated = list(stats.c)
    agreement = coeffs == enumerated

    points = _parse_points(args.eval) if args.eval else _default_points(matrix.rank)
    verdicts = []
    for point in points:
        if not 0 < point < 1:
            raise ValueError(f"evaluation points must lie in (0, 1), got {point}")
        verdict = finiteness_verdict(series, point)
        try:
            verdict = attach_ratio_window(verdict, quotient_criterion(stats, point))
        except (RangeEmptyError, HypothesisError):
            pass
        verdicts.append(verdict.to_dict())

    payload = {
        "matrix": matrix_to_data(matrix),
        "num": list(series.num),
        "den": list(series.den),
        "depth": depth,
        "coeffs": coeffs,
        "enumerated": enumerated,
        "agreement": agreement,
        "verdicts": verdicts,
    }
    _emit(_dumps(payload), args.out)
    if not agreement:
        print(
            "error: series coefficients disagree with enumeration", file=sys.stderr
        )
        return EXIT_COEFF
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coxgrowth",
        description="Exact growth data for finitely generated Coxeter systems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_depth=True):
        p.add_argument("--matrix", required=True, help="path to a matrix JSON file")
        if need_depth:
            p.add_argument("--depth", type=int, default=None,
                           help="ball radius (default 12/10/8 by rank)")
            p.add_argument("--cap", type=int, default=10_000_000,
                           help="element cap for enumeration")
        p.add_argument("--out", default=None, help="output path (default stdout)")

    p_info = sub.add_parser("info", help="diagram properties and spherical subsets")
    common(p_info, need_depth=False)
    p_info.set_defaults(func=cmd_info)

    p_ball = sub.add_parser("ball", help="enumerate the ball as JSON lines")
    common(p_ball)
    p_ball.set_defaults(func=cmd_ball)

    p_stats = sub.add_parser("stats", help="sphere and descent counts per length")
    common(p_stats)
    p_stats.add_argument("--format", choices=("json", "csv"), default="json")
    p_stats.set_defaults(func=cmd_stats)

    p_verify = sub.add_parser("verify", help="run verification suites")
    common(p_verify)
    p_verify.add_argument("--suite", default=None,
                          help=f"comma list from: {', '.join(_SUITE_ORDER)}")
    p_verify.add_argument("--no-hypothesis-gate", action="store_true",
                          help="run suites outside their hypotheses; "
                               "counterexamples are reported, not fatal")
    p_verify.set_defaults(func=cmd_verify)

    p_series = sub.add_parser("series", help="growth series and finiteness verdicts")
    common(p_series)
    p_series.add_argument("--eval", default=None,
                          help="comma list of rational points like 1/2,1/3")
    p_series.set_defaults(func=cmd_series)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_RESOURCE
    except (MatrixError, ValueError, ZeroDivisionError, ClassificationError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_IO


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
