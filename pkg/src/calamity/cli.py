"""Command-line entry points.

Five commands: weekday, tables, classify, verify, metrics. Every
command takes ``--json`` for machine-readable output; the JSON is
emitted with sorted keys and two-space indentation so that parsing and
re-dumping it reproduces the bytes exactly.

Exit codes: 0 on success, 1 when a verification or classification
fails, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Iterable, Sequence

from .conway import DOOMSDAY_DATES, doomsday_date, weekday_standard
from .core import MAX_YEAR, MIN_YEAR, Date, oracle_weekday
from .doomyears import MAX_DISTANCE, doomyear
from .method import AUTO, StepTrace, weekday_calamity_traced
from .metrics import ComparisonReport, MethodProfile, OpKind, compare
from .systems import NotUniformError, classify, system
from .verify import VerificationSummary, verify_range

MONTH_NAMES = (
    "Jan", "Feb", "Mar", "Apr", "May", "Jun",
    "Jul", "Aug", "Sep", "Oct", "Nov", "Dec",
)

#: Century classes rendered by the tables command, one per anchor slot.
CENTURY_LABELS = ((1700, "1700s"), (1800, "1800s"), (1900, "1900s"), (2000, "2000s"))

_DEFAULT_VERIFY_START = 1583
_DEFAULT_VERIFY_END = 2599

_TOKEN_PATTERN = re.compile(r"^(\d{1,2})/(\d{1,2})$")


def _render_json(payload: object) -> str:
    return json.dumps(payload, indent=2, sort_keys=True)


def _date_argument(text: str) -> Date:
    try:
        return Date.fromisoformat(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _year_argument(text: str) -> int:
    try:
        year = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a year") from None
    if not MIN_YEAR <= year <= MAX_YEAR:
        raise argparse.ArgumentTypeError(
            f"year {year} outside supported range {MIN_YEAR}..{MAX_YEAR}"
        )
    return year


def _month_day_argument(text: str) -> tuple[int, int]:
    match = _TOKEN_PATTERN.match(text)
    if match is None:
        raise argparse.ArgumentTypeError(f"{text!r} is not a month/day token")
    return int(match.group(1)), int(match.group(2))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="calamity",
        description="Weekday computation by table lookup, with checking tools.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_weekday = sub.add_parser("weekday", help="compute the weekday of a date")
    p_weekday.add_argument("date", type=_date_argument, help="ISO date, e.g. 2025-03-14")
    p_weekday.add_argument(
        "--method",
        choices=("calamity", "standard", "oracle"),
        default="calamity",
        help="computation route (default: calamity)",
    )
    p_weekday.add_argument(
        "--direction",
        choices=("forward", "backward", "auto"),
        default=None,
        help="month-step direction, calamity only (default: auto)",
    )
    p_weekday.add_argument(
        "--trace",
        action="store_true",
        help="show every component of the computation, calamity only",
    )
    p_weekday.add_argument("--json", action="store_true", dest="as_json")

    p_tables = sub.add_parser("tables", help="print the lookup tables")
    p_tables.add_argument(
        "--system",
        type=int,
        default=0,
        metavar="K",
        help="anchor system 0..6 (default: 0)",
    )
    p_tables.add_argument("--leap", action="store_true", help="leap-year month codes")
    p_tables.add_argument("--json", action="store_true", dest="as_json")

    p_classify = sub.add_parser(
        "classify", help="identify the anchor system behind 12 month/day pairs"
    )
    p_classify.add_argument(
        "dates",
        type=_month_day_argument,
        nargs=12,
        metavar="M/D",
        help="one token per month, e.g. 3/7",
    )
    p_classify.add_argument("--json", action="store_true", dest="as_json")

    p_verify = sub.add_parser("verify", help="run the self-verification sweeps")
    p_verify.add_argument(
        "start", type=_year_argument, nargs="?", default=_DEFAULT_VERIFY_START
    )
    p_verify.add_argument(
        "end", type=_year_argument, nargs="?", default=_DEFAULT_VERIFY_END
    )
    p_verify.add_argument("--json", action="store_true", dest="as_json")

    p_metrics = sub.add_parser(
        "metrics", help="compare per-date operation profiles of the two methods"
    )
    p_metrics.add_argument(
        "start", type=_year_argument, nargs="?", default=_DEFAULT_VERIFY_START
    )
    p_metrics.add_argument(
        "end", type=_year_argument, nargs="?", default=_DEFAULT_VERIFY_END
    )
    p_metrics.add_argument("--json", action="store_true", dest="as_json")

    return parser


def _usage_error(message: str) -> int:
    print(f"calamity: error: {message}", file=sys.stderr)
    return 2


def _trace_lines(trace: StepTrace) -> list[str]:
    nav = trace.year_navigation
    nav_sign = "+" if nav.direction.value == "forward" else "-"
    step = trace.target_gap
    offset = trace.month_offset
    offset_sign = "+" if offset >= 0 else "-"
    return [
        f"  century anchor  {trace.century_anchor}",
        f"  year            {nav.anchor:02d} {nav_sign} {nav.distance} -> digit {nav.digit}",
        f"  month code      {trace.month_code}",
        f"  month step      {step.direction}: gap {step.gap} + digit {step.digit} -> {offset_sign}{abs(offset)}",
        f"  total           ({trace.century_anchor} + {nav.digit} {offset_sign} {abs(offset)}) mod 7 = {int(trace.final)}",
    ]


def _trace_payload(trace: StepTrace) -> dict[str, object]:
    nav = trace.year_navigation
    step = trace.target_gap
    return {
        "century_anchor": trace.century_anchor,
        "year": {
            "anchor": nav.anchor,
            "distance": nav.distance,
            "direction": nav.direction.value,
            "digit": nav.digit,
        },
        "month_code": str(trace.month_code),
        "month_step": {
            "direction": step.direction.value,
            "gap": step.gap,
            "digit": step.digit,
            "offset": trace.month_offset,
        },
        "final": int(trace.final),
    }


def _cmd_weekday(args: argparse.Namespace) -> int:
    if args.method != "calamity" and (args.trace or args.direction is not None):
        return _usage_error("--trace and --direction apply to --method calamity only")
    trace: StepTrace | None = None
    if args.method == "oracle":
        day = oracle_weekday(args.date)
    elif args.method == "standard":
        day = weekday_standard(args.date)
    else:
        direction = args.direction if args.direction is not None else AUTO
        day, trace = weekday_calamity_traced(args.date, direction)

    if args.as_json:
        payload: dict[str, object] = {
            "date": str(args.date),
            "method": args.method,
            "weekday": int(day),
            "name": day.name,
        }
        if args.trace:
            assert trace is not None
            payload["trace"] = _trace_payload(trace)
        print(_render_json(payload))
        return 0

    print(f"{day.name} ({int(day)})")
    if args.trace:
        assert trace is not None
        for line in _trace_lines(trace):
            print(line)
    return 0


def _month_row(label: str, cells: Iterable[object]) -> str:
    return "  " + label.ljust(8) + "".join(str(cell).rjust(5) for cell in cells)


def _cmd_tables(args: argparse.Namespace) -> int:
    if not 0 <= args.system <= 6:
        return _usage_error(f"system {args.system} outside 0..6")
    sys_k = system(args.system)
    codes = [sys_k.code(month, args.leap) for month in range(1, 13)]
    residues = [(DOOMSDAY_DATES[m - 1] + args.system) % 7 for m in range(1, 13)]
    year_rows = [doomyear(d) for d in range(MAX_DISTANCE + 1)]
    anchors = {label: int(sys_k.century_anchor(rep)) for rep, label in CENTURY_LABELS}

    if args.as_json:
        payload = {
            "system": args.system,
            "leap": args.leap,
            "months": [
                {"month": m, "code": str(codes[m - 1]), "residue": residues[m - 1]}
                for m in range(1, 13)
            ],
            "years": [
                {
                    "distance": row.distance,
                    "F": row.packed.F,
                    "B": row.packed.B,
                    "D": row.packed.D,
                }
                for row in year_rows
            ],
            "century_anchors": anchors,
        }
        print(_render_json(payload))
        return 0

    kind = "leap year" if args.leap else "common year"
    print(f"Month codes (system {args.system}, {kind})")
    print(_month_row("month", MONTH_NAMES))
    if args.system == 0:
        days = [doomsday_date(m, args.leap) for m in range(1, 13)]
        print(_month_row("day", days))
    print(_month_row("code", codes))
    print()
    print("Year table")
    print(f"  {'d':>3} {'F':>4} {'B':>4} {'D':>5}")
    for row in year_rows:
        packed = row.packed
        print(f"  {row.distance:>3} {packed.F:>4} {packed.B:>4} {packed.D:>5}")
    print()
    print(f"Century anchors (system {args.system})")
    print("  " + "   ".join(f"{label} {anchor}" for label, anchor in anchors.items()))
    return 0


def _cmd_classify(args: argparse.Namespace) -> int:
    try:
        k = classify(args.dates)
    except NotUniformError as exc:
        print(f"not uniform: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        return _usage_error(str(exc))

    codes = [str(system(k).code(month)) for month in range(1, 13)]
    if args.as_json:
        print(_render_json({"k": k, "codes": codes}))
        return 0
    print(f"k = {k}")
    print(_month_row("month", MONTH_NAMES))
    print(_month_row("code", codes))
    return 0


def _summary_payload(summary: VerificationSummary) -> dict[str, object]:
    return {
        "start_year": summary.start_year,
        "end_year": summary.end_year,
        "dates_tested": summary.dates_tested,
        "ok": summary.ok,
        "checks": [
            {
                "name": check.name,
                "cases": check.cases,
                "failures": check.failure_count,
                "examples": list(check.examples),
            }
            for check in summary.checks
        ],
    }


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.start > args.end:
        return _usage_error(f"reversed year range {args.start}..{args.end}")
    summary = verify_range(args.start, args.end)
    if args.as_json:
        print(_render_json(_summary_payload(summary)))
        return 0 if summary.ok else 1

    print(f"verify {summary.start_year}..{summary.end_year}")
    width = max(len(check.name) for check in summary.checks)
    for check in summary.checks:
        status = "ok" if check.ok else f"{check.failure_count} FAILED"
        print(f"  {check.name.ljust(width)}  {check.cases:>8} cases  {status}")
        for example in check.examples:
            print(f"    {example}")
    print(f"dates tested: {summary.dates_tested}")
    print("all checks passed" if summary.ok else f"failures: {summary.failure_count}")
    return 0 if summary.ok else 1


def _profile_payload(profile: MethodProfile) -> dict[str, object]:
    return {
        "counts": {kind.value: profile.counts[kind] for kind in OpKind},
        "total": profile.total,
        "serial_depth": profile.serial_depth,
        "dependency": profile.dependency,
        "max_intermediate": profile.max_intermediate,
        "divisions": profile.divisions,
        "large_mod_reductions": profile.large_mod_reductions,
    }


def _metric_rows(report: ComparisonReport) -> list[tuple[str, object, object]]:
    rows: list[tuple[str, object, object]] = [
        (kind.value, report.standard.counts[kind], report.calamity.counts[kind])
        for kind in OpKind
    ]
    rows += [
        ("total", report.standard.total, report.calamity.total),
        ("serial depth", report.standard.serial_depth, report.calamity.serial_depth),
        ("dependency", report.standard.dependency, report.calamity.dependency),
        (
            "max intermediate",
            report.standard.max_intermediate,
            report.calamity.max_intermediate,
        ),
        ("divisions", report.standard.divisions, report.calamity.divisions),
        (
            "large mod reductions",
            report.standard.large_mod_reductions,
            report.calamity.large_mod_reductions,
        ),
    ]
    return rows


def _cmd_metrics(args: argparse.Namespace) -> int:
    if args.start > args.end:
        return _usage_error(f"reversed year range {args.start}..{args.end}")
    report = compare(args.start, args.end)
    if args.as_json:
        payload = {
            "start_year": report.start_year,
            "end_year": report.end_year,
            "dates_scanned": report.dates_scanned,
            "standard": _profile_payload(report.standard),
            "calamity": _profile_payload(report.calamity),
        }
        print(_render_json(payload))
        return 0

    print(f"metrics {report.start_year}..{report.end_year} ({report.dates_scanned} dates)")
    rows = _metric_rows(report)
    label_width = max(len(label) for label, _, _ in rows)
    print(f"  {'per date'.ljust(label_width)}  {'standard':>11}  {'calamity':>11}")
    for label, std, cal in rows:
        print(f"  {label.ljust(label_width)}  {str(std):>11}  {str(cal):>11}")
    return 0


_HANDLERS = {
    "weekday": _cmd_weekday,
    "tables": _cmd_tables,
    "classify": _cmd_classify,
    "verify": _cmd_verify,
    "metrics": _cmd_metrics,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    return _HANDLERS[args.command](args)


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
