"""Command-line surface: exact ratios, limits, convergence tables, verification.

Output contract: exact values are always emitted as decimal strings of
numerator and denominator (never floats), decimal renderings use
round-half-even at the requested digit count, and output bytes are identical
for identical arguments regardless of ``--jobs``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import partial
from typing import Callable, Iterable, Sequence, TypeVar

from .exact import RootBound, binomial, nth_root_bounds
from .grid import (
    GridSpec,
    cube_mean_ratio_limit,
    cube_mean_ratio_sum,
    cuboid_mean_ratio_closed,
    cuboid_mean_ratio_limit,
    edge_ratio_bounds,
    total_cubes,
    total_cuboids,
)
from .identities import (
    ConvergenceRow,
    VerificationReport,
    alternating_binomial_sum,
    alternating_binomial_sum_closed,
    beta_integral_exact,
    central_binomial_failures,
    certified_gap,
)
from .oracle import (
    DEFAULT_PLACEMENT_BUDGET,
    DEFAULT_SHAPE_BUDGET,
    BudgetExceededError,
    EnumerationBudget,
    count_bruteforce,
    cube_mean_bruteforce,
    cuboid_mean_bruteforce,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2

_PROP2_BLOCK = 1024  # fixed sweep block size, independent of --jobs

T = TypeVar("T")
U = TypeVar("U")


def format_decimal(value: Fraction, digits: int) -> str:
    """Render a rational with ``digits`` places, round-half-even ties."""
    negative = value < 0
    num, den = abs(value).numerator, abs(value).denominator
    scale = 10**digits
    scaled, rem = divmod(num * scale, den)
    doubled = 2 * rem
    if doubled > den or (doubled == den and scaled % 2 == 1):
        scaled += 1
    sign = "-" if negative and scaled else ""
    whole, frac = divmod(scaled, scale)
    return f"{sign}{whole}.{frac:0{digits}d}"


def parse_range(text: str) -> range:
    """Parse ``start..end[:step]`` into an inclusive range."""
    match = re.fullmatch(r"(\d+)\.\.(\d+)(?::(\d+))?", text)
    if not match:
        raise argparse.ArgumentTypeError(
            f"invalid range {text!r}, expected start..end[:step]"
        )
    start, end = int(match.group(1)), int(match.group(2))
    step = int(match.group(3)) if match.group(3) else 1
    if end < start:
        raise argparse.ArgumentTypeError(f"range end {end} is below start {start}")
    if step < 1:
        raise argparse.ArgumentTypeError(f"range step must be >= 1, got {step}")
    return range(start, end + 1, step)


def positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _map_ordered(fn: Callable[[T], U], items: Sequence[T], jobs: int) -> list[U]:
    """Apply fn to items, preserving order; parallel when it pays off.

    Results are identical for any job count: items are independent and the
    pool map preserves input order.
    """
    if jobs <= 1 or len(items) < 8:
        return [fn(item) for item in items]
    workers = min(jobs, len(items))
    chunk = max(1, len(items) // (workers * 4))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=chunk))


# ---------------------------------------------------------------------------
# emission helpers

CSV_HEADER = ["index", "num", "den", "decimal", "gap_num", "gap_den"]


def _fraction_obj(x: Fraction) -> dict[str, str]:
    return {"numerator": str(x.numerator), "denominator": str(x.denominator)}


def _row_scalars(row: ConvergenceRow) -> tuple[Fraction, Fraction]:
    """Collapse a row to (value, gap) rationals for tabular output.

    Enclosure rows report their midpoint and the certified minimum distance
    to the limit (the low end of the gap interval), which is a sound lower
    bound on the true distance.
    """
    if isinstance(row.value, RootBound):
        gap_lo, _gap_hi = row.gap
        return row.value.midpoint, gap_lo
    return row.value, row.gap


def _emit_rows(
    kind: str,
    fixed_params: dict[str, int],
    swept_name: str,
    rows: Iterable[ConvergenceRow],
    digits: int,
    fmt: str,
) -> None:
    out = sys.stdout
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for row in rows:
            value, gap = _row_scalars(row)
            writer.writerow(
                [
                    row.index,
                    value.numerator,
                    value.denominator,
                    format_decimal(value, digits),
                    gap.numerator,
                    gap.denominator,
                ]
            )
    else:
        for row in rows:
            value, gap = _row_scalars(row)
            parameters = dict(fixed_params)
            parameters[swept_name] = row.index
            parameters["digits"] = digits
            obj = {
                "kind": kind,
                "parameters": parameters,
                "exact": _fraction_obj(value),
                "decimal": format_decimal(value, digits),
                "gap": _fraction_obj(gap),
            }
            out.write(json.dumps(obj) + "\n")


def _emit_scalar(
    kind: str,
    parameters: dict[str, int],
    value: Fraction,
    digits: int,
    fmt: str,
    index: int,
    gap: Fraction,
    extra: dict | None = None,
) -> None:
    out = sys.stdout
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        writer.writerow(
            [
                index,
                value.numerator,
                value.denominator,
                format_decimal(value, digits),
                gap.numerator,
                gap.denominator,
            ]
        )
    else:
        obj = {
            "kind": kind,
            "parameters": dict(parameters, digits=digits),
            "exact": _fraction_obj(value),
            "decimal": format_decimal(value, digits),
        }
        if extra:
            obj.update(extra)
        out.write(json.dumps(obj) + "\n")


# ---------------------------------------------------------------------------
# sweep workers (module level so they pickle for the process pool)


def _cuboid_row(n: int, m: int) -> tuple[ConvergenceRow, bool]:
    value = cuboid_mean_ratio_closed(GridSpec(n, m))
    limit = cuboid_mean_ratio_limit(n)
    gap = abs(value - limit)
    return ConvergenceRow(m, value, limit, gap), gap >= 0


def _cube_row(n: int, m: int) -> tuple[ConvergenceRow, bool]:
    value = cube_mean_ratio_sum(GridSpec(n, m))
    limit = cube_mean_ratio_limit(n)
    gap = abs(value - limit)
    return ConvergenceRow(m, value, limit, gap), gap >= 0


def _edge_ratio_row(digits: int, n: int) -> tuple[ConvergenceRow, bool]:
    bound = edge_ratio_bounds(n, digits)
    limit = Fraction(1, 4)
    ok = bound.encloses(cube_mean_ratio_limit(n))
    return ConvergenceRow(n, bound, limit, certified_gap(bound, limit)), ok


def _central_binomial_row(which: str, digits: int, n: int) -> tuple[ConvergenceRow, bool]:
    top = 2 * n if which == "2n" else 2 * n + 1
    value = Fraction(binomial(top, n))
    bound = nth_root_bounds(value, n, digits)
    limit = Fraction(4)
    ok = bound.encloses(value)
    return ConvergenceRow(n, bound, limit, certified_gap(bound, limit)), ok


def _prop1_case(n: int) -> VerificationReport:
    return VerificationReport(
        n, alternating_binomial_sum(n), alternating_binomial_sum_closed(n), "eq"
    )


def _beta_case(n: int) -> VerificationReport:
    expected = (-1) ** n * alternating_binomial_sum_closed(n)
    return VerificationReport(n, beta_integral_exact(n), expected, "eq")


def _prop2_block_failures(block: tuple[int, int]) -> list[VerificationReport]:
    return central_binomial_failures(block[0], block[1])


def _oracle_case(
    budgets: tuple[int, int], case: tuple[int, int]
) -> tuple[int, list[str]]:
    """Run all oracle-vs-closed-form checks for one grid; return (checks, failures)."""
    n, m = case
    g = GridSpec(n, m)
    placement = EnumerationBudget.placement(budgets[0])
    shape = EnumerationBudget.shape(budgets[1])
    checks: list[tuple[str, object, object]] = [
        ("cuboid-mean-placement", cuboid_mean_bruteforce(g, placement), cuboid_mean_ratio_closed(g)),
        ("cuboid-mean-shape", cuboid_mean_bruteforce(g, shape), cuboid_mean_ratio_closed(g)),
        ("cube-mean-placement", cube_mean_bruteforce(g, placement), cube_mean_ratio_sum(g)),
        ("cube-mean-shape", cube_mean_bruteforce(g, shape), cube_mean_ratio_sum(g)),
        ("cuboid-count", count_bruteforce(g, "cuboid", placement), total_cuboids(g)),
        ("cube-count", count_bruteforce(g, "cube", placement), total_cubes(g)),
    ]
    failures = [
        f"FAIL oracle n={n} m={m} {label}: {got} != {want}"
        for label, got, want in checks
        if got != want
    ]
    return len(checks), failures


# ---------------------------------------------------------------------------
# commands


def cmd_ratio(args: argparse.Namespace) -> int:
    g = GridSpec(args.n, args.m)
    if args.kind == "cuboid":
        value = cuboid_mean_ratio_closed(g)
        limit = cuboid_mean_ratio_limit(args.n)
    else:
        value = cube_mean_ratio_sum(g)
        limit = cube_mean_ratio_limit(args.n)
    _emit_scalar(
        f"{args.kind}-ratio",
        {"n": args.n, "m": args.m},
        value,
        args.digits,
        args.format,
        index=args.m,
        gap=abs(value - limit),
    )
    return EXIT_OK


def cmd_limit(args: argparse.Namespace) -> int:
    if args.kind == "cuboid":
        value = cuboid_mean_ratio_limit(args.n)
    else:
        value = cube_mean_ratio_limit(args.n)
    _emit_scalar(
        f"{args.kind}-limit",
        {"n": args.n},
        value,
        args.digits,
        args.format,
        index=args.n,
        gap=Fraction(0),
    )
    return EXIT_OK


def cmd_edge_ratio(args: argparse.Namespace) -> int:
    bound = edge_ratio_bounds(args.n, args.digits)
    if not bound.encloses(cube_mean_ratio_limit(args.n)):
        print("error: enclosure failed its own certification", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    limit = Fraction(1, 4)
    distance = certified_gap(bound, limit)
    extra = {
        "enclosure": {
            "lo": _fraction_obj(bound.lo),
            "hi": _fraction_obj(bound.hi),
            "root_degree": bound.root_degree,
            "requested_digits": bound.requested_digits,
        },
        "distance_to_limit": {
            "lo": _fraction_obj(distance[0]),
            "hi": _fraction_obj(distance[1]),
        },
        "limit": _fraction_obj(limit),
    }
    _emit_scalar(
        "edge-ratio",
        {"n": args.n},
        bound.midpoint,
        args.digits,
        args.format,
        index=args.n,
        gap=distance[0],
        extra=extra,
    )
    return EXIT_OK


def cmd_converge(args: argparse.Namespace) -> int:
    jobs = args.jobs if args.jobs is not None else (os.cpu_count() or 1)
    indices = list(args.range)
    if args.kind in ("cuboid", "cube"):
        if args.n is None:
            print("error: --n is required for cuboid/cube sweeps", file=sys.stderr)
            return EXIT_USAGE
        worker = partial(_cuboid_row if args.kind == "cuboid" else _cube_row, args.n)
        kind = f"{args.kind}-converge"
        fixed = {"n": args.n}
        swept = "m"
    elif args.kind == "edge-ratio":
        worker = partial(_edge_ratio_row, args.digits)
        kind = "edge-ratio-converge"
        fixed = {}
        swept = "n"
    else:
        worker = partial(_central_binomial_row, args.which, args.digits)
        kind = f"central-binomial-converge-{args.which}"
        fixed = {}
        swept = "n"
    results = _map_ordered(worker, indices, jobs)
    bad = [row.index for row, ok in results if not ok]
    if bad:
        print(f"error: certified invariant failed at index {bad[0]}", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    _emit_rows(kind, fixed, swept, (row for row, _ in results), args.digits, args.format)
    return EXIT_OK


_VERIFY_DEFAULTS = {
    "prop1": range(0, 201),
    "beta": range(0, 101),
    "prop2-bounds": range(1, 10001),
    "prop2-ratio": range(1, 10001),
    "oracle": range(1, 4),
}
_ORACLE_DEFAULT_M = range(1, 7)


def _verify_reports_suite(
    name: str,
    cases: Sequence[int],
    worker: Callable[[int], VerificationReport],
    jobs: int,
) -> tuple[int, list[str]]:
    reports = _map_ordered(worker, cases, jobs)
    lines = [
        f"FAIL {name} n={r.case_index}: {r.lhs} "
        f"{'==' if r.relation == 'eq' else '<='} {r.rhs}"
        for r in reports
        if not r.passed
    ]
    return len(reports), lines


def _verify_prop2_suite(
    name: str, cases: range, jobs: int
) -> tuple[int, list[str]]:
    relation = "le" if name == "prop2-bounds" else "eq"
    if cases.step != 1:
        # blockwise incremental sweep needs contiguous ranges
        cases = range(cases.start, cases[-1] + 1)
    blocks = [
        (s, min(s + _PROP2_BLOCK - 1, cases[-1]))
        for s in range(cases.start, cases[-1] + 1, _PROP2_BLOCK)
    ]
    failures: list[VerificationReport] = []
    for block_failures in _map_ordered(_prop2_block_failures, blocks, jobs):
        failures.extend(block_failures)
    checks = 2 * len(cases) if relation == "le" else len(cases)
    lines = [
        f"FAIL {name} n={r.case_index}: {r.lhs} "
        f"{'==' if r.relation == 'eq' else '<='} {r.rhs}"
        for r in failures
        if r.relation == relation
    ]
    return checks, lines


def _verify_oracle_suite(
    n_range: Sequence[int], m_range: Sequence[int], budgets: tuple[int, int], jobs: int
) -> tuple[int, list[str]]:
    cases = [(n, m) for n in n_range for m in m_range]
    results = _map_ordered(partial(_oracle_case, budgets), cases, jobs)
    checks = sum(c for c, _ in results)
    lines = [line for _, case_lines in results for line in case_lines]
    return checks, lines


def cmd_verify(args: argparse.Namespace) -> int:
    jobs = args.jobs if args.jobs is not None else (os.cpu_count() or 1)
    budgets = (
        args.budget if args.budget else DEFAULT_PLACEMENT_BUDGET,
        args.budget if args.budget else DEFAULT_SHAPE_BUDGET,
    )
    suites = (
        ["prop1", "beta", "prop2-bounds", "prop2-ratio", "oracle"]
        if args.suite == "all"
        else [args.suite]
    )
    if args.suite == "all" and (args.range is not None or args.m_range is not None):
        print("error: --range/--m-range apply to a single named suite", file=sys.stderr)
        return EXIT_USAGE
    exit_code = EXIT_OK
    for suite in suites:
        cases = args.range if args.range is not None else _VERIFY_DEFAULTS[suite]
        if suite == "prop1":
            checks, lines = _verify_reports_suite(suite, list(cases), _prop1_case, jobs)
        elif suite == "beta":
            checks, lines = _verify_reports_suite(suite, list(cases), _beta_case, jobs)
        elif suite in ("prop2-bounds", "prop2-ratio"):
            if cases.start < 1:
                print(f"error: {suite} requires n >= 1", file=sys.stderr)
                return EXIT_USAGE
            checks, lines = _verify_prop2_suite(suite, cases, jobs)
        else:
            m_range = args.m_range if args.m_range is not None else _ORACLE_DEFAULT_M
            checks, lines = _verify_oracle_suite(list(cases), list(m_range), budgets, jobs)
        for line in lines:
            print(line)
        print(f"{suite}: {checks} checks, {len(lines)} failures")
        if lines:
            exit_code = EXIT_VERIFY_FAILED
    return exit_code


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--digits",
        type=positive_int,
        default=10,
        help="decimal places for renderings (round-half-even, default 10)",
    )
    common.add_argument(
        "--format",
        choices=("csv", "json"),
        default="json",
        help="output format (default json, one object per line)",
    )
    common.add_argument(
        "--budget",
        type=positive_int,
        default=None,
        help="cap on enumerated objects for oracle sweeps "
        f"(defaults: {DEFAULT_PLACEMENT_BUDGET} placement, {DEFAULT_SHAPE_BUDGET} shape)",
    )
    common.add_argument(
        "--jobs",
        type=positive_int,
        default=None,
        help="worker processes for sweeps (default: available parallelism); "
        "output is identical for any value",
    )

    parser = argparse.ArgumentParser(
        prog="gridmeans",
        description="Exact mean-volume statistics of grid-aligned boxes in a "
        "subdivided hypercube.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_ratio = sub.add_parser(
        "ratio", parents=[common], help="mean volume ratio at a finite subdivision"
    )
    p_ratio.add_argument("kind", choices=("cuboid", "cube"))
    p_ratio.add_argument("--n", type=positive_int, required=True, help="dimension")
    p_ratio.add_argument("--m", type=positive_int, required=True, help="subdivisions per edge")
    p_ratio.set_defaults(func=cmd_ratio)

    p_limit = sub.add_parser(
        "limit", parents=[common], help="large-m limit of the mean volume ratio"
    )
    p_limit.add_argument("kind", choices=("cuboid", "cube"))
    p_limit.add_argument("--n", type=positive_int, required=True, help="dimension")
    p_limit.set_defaults(func=cmd_limit)

    p_conv = sub.add_parser(
        "converge", parents=[common], help="convergence table over a range"
    )
    p_conv.add_argument(
        "kind", choices=("cuboid", "cube", "edge-ratio", "central-binomial")
    )
    p_conv.add_argument(
        "--range",
        type=parse_range,
        required=True,
        help="sweep range start..end[:step] (over m for cuboid/cube, over n otherwise)",
    )
    p_conv.add_argument(
        "--n", type=positive_int, default=None, help="dimension (cuboid/cube sweeps)"
    )
    p_conv.add_argument(
        "--which",
        choices=("2n", "2n+1"),
        default="2n",
        help="top index for central-binomial roots (default 2n)",
    )
    p_conv.set_defaults(func=cmd_converge)

    p_verify = sub.add_parser(
        "verify", parents=[common], help="run an exact verification sweep"
    )
    p_verify.add_argument(
        "suite",
        choices=("prop1", "beta", "prop2-bounds", "prop2-ratio", "oracle", "all"),
    )
    p_verify.add_argument(
        "--range",
        type=parse_range,
        default=None,
        help="n range for the suite (defaults per suite)",
    )
    p_verify.add_argument(
        "--m-range",
        type=parse_range,
        default=None,
        help="m range for the oracle suite (default 1..6)",
    )
    p_verify.set_defaults(func=cmd_verify)

    p_edge = sub.add_parser(
        "edge-ratio",
        parents=[common],
        help="certified enclosure of the limiting cube edge ratio",
    )
    p_edge.add_argument("--n", type=positive_int, required=True, help="dimension")
    p_edge.set_defaults(func=cmd_edge_ratio)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
