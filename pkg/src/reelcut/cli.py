"""Command-line front end: ``reelcut {solve,validate,bound,compare}``.

Exit codes: 0 success, 1 I/O or parse error, 2 schedule has violations,
3 pool contains an order wider than the deckle.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from .exact import MAX_ROLLS
from .formats import REPORT_FORMATS, PoolFormatError, ScheduleFormatError, parse_pool, parse_schedule, render_report
from .heuristics import ALGORITHMS, solve
from .model import DeckleSpec, UnsatisfiableOrderError, lower_bound_reels, total_demand_width, validate_schedule

EXIT_OK, EXIT_INPUT, EXIT_INVALID, EXIT_UNSATISFIABLE = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_INPUT):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; 2 is reserved for invalid schedules
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="reelcut", description="Plan how jumbo paper reels are slit into customer rolls.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def pool_args(p):
        p.add_argument("pool", type=Path, help="order pool, .csv or .json")
        p.add_argument("--input-format", choices=("csv", "structured"),
                       help="pool format (default: from the file extension)")
        p.add_argument("--deckle-width", type=int, help="nominal reel width (CSV pools only)")
        p.add_argument("--trim-allowance", type=int, help="width lost to edge trimming (CSV pools only)")
        p.add_argument("--unit", choices=("cm", "mm"), help="length unit (CSV pools only, default cm)")

    p = sub.add_parser("solve", help="build a cutting schedule")
    pool_args(p)
    p.add_argument("--algorithm", choices=ALGORITHMS, default="coupling")
    p.add_argument("--format", choices=REPORT_FORMATS, default="table")
    p.add_argument("--trace", action="store_true", help="print construction steps to stderr")

    p = sub.add_parser("validate", help="check a schedule document against a pool")
    pool_args(p)
    p.add_argument("schedule", type=Path, help="schedule document (JSON)")

    p = sub.add_parser("bound", help="print the demand width and the reel lower bound")
    pool_args(p)

    p = sub.add_parser("compare", help="run every algorithm on one pool")
    pool_args(p)
    return parser


def _read(path: Path) -> bytes:
    try:
        return path.read_bytes()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None


def load_pool(args):
    fmt = args.input_format or ("csv" if args.pool.suffix.lower() == ".csv" else "structured")
    flags_given = any(v is not None for v in (args.deckle_width, args.trim_allowance, args.unit))
    deckle = None
    if fmt == "csv":
        if args.deckle_width is None:
            raise CliError("CSV pools need --deckle-width")
        try:
            deckle = DeckleSpec(args.deckle_width, args.trim_allowance or 0, args.unit or "cm")
        except ValueError as exc:
            raise CliError(f"bad deckle flags: {exc}") from None
    elif flags_given:
        raise CliError("deckle flags apply to CSV pools only; JSON pools carry their own deckle")
    try:
        return parse_pool(_read(args.pool), fmt, deckle)
    except PoolFormatError as exc:
        raise CliError(f"{args.pool}: {exc}") from None


def cmd_solve(args, out) -> int:
    pool = load_pool(args)
    result = solve(pool, args.algorithm)
    if args.trace and result.trace:
        for step in result.trace:
            print(step, file=sys.stderr)
    out.write(render_report(result, pool, args.format))
    return EXIT_OK


def cmd_validate(args, out) -> int:
    pool = load_pool(args)
    try:
        doc = parse_schedule(_read(args.schedule))
    except ScheduleFormatError as exc:
        raise CliError(f"{args.schedule}: {exc}") from None
    schedule = doc.schedule
    report = validate_schedule(schedule, pool)
    if report.valid:
        result = doc.to_result(pool)
        out.write(f"valid: {result.used_reels} reels, trim loss {result.trim_loss} {pool.deckle.unit}\n")
        return EXIT_OK
    out.write(f"invalid: {len(report.violations)} violation(s)\n")
    for v in report.violations:
        out.write(f"  {v}\n")
    return EXIT_INVALID


def cmd_bound(args, out) -> int:
    pool = load_pool(args)
    out.write(f"demand_width={total_demand_width(pool)} lower_bound={lower_bound_reels(pool)}\n")
    return EXIT_OK


def compare_rows(pool):
    """``(algorithm, reels, trim loss, seconds)`` for every applicable solver."""
    algorithms = ["coupling", "first-fit", "best-fit"]
    if pool.total_rolls() <= MAX_ROLLS:
        algorithms.append("exact")
    rows = []
    for name in algorithms:
        start = time.perf_counter()
        result = solve(pool, name)
        elapsed = time.perf_counter() - start
        rows.append((name, result.used_reels, result.trim_loss, elapsed))
    return rows


def cmd_compare(args, out) -> int:
    pool = load_pool(args)
    bound = lower_bound_reels(pool)
    out.write(f"orders={len(pool)} rolls={pool.total_rolls()} demand_width={total_demand_width(pool)} "
              f"effective_width={pool.effective_width} unit={pool.deckle.unit} lower_bound={bound}\n")
    out.write(f"{'algorithm':<10} {'reels':>6} {'trim_loss':>10} {'time_ms':>10}\n")
    for name, reels, loss, seconds in compare_rows(pool):
        out.write(f"{name:<10} {reels:>6} {loss:>10} {seconds * 1e3:>10.3f}\n")
    return EXIT_OK


COMMANDS = {"solve": cmd_solve, "validate": cmd_validate, "bound": cmd_bound, "compare": cmd_compare}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code or EXIT_OK
    try:
        return COMMANDS[args.command](args, out)
    except CliError as exc:
        print(f"reelcut: {exc}", file=sys.stderr)
        return exc.code
    except UnsatisfiableOrderError as exc:
        print(f"reelcut: unsatisfiable pool: {exc}", file=sys.stderr)
        return EXIT_UNSATISFIABLE


if __name__ == "__main__":
    sys.exit(main())
