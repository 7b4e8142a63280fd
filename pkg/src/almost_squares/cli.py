"""Command-line front door for almost-square queries.

Verbs: check, floor, count, nth, list, flock, pioneers, analyze,
trigrid, oracle-verify.  Integer arguments are parsed as
arbitrary-precision decimals (inputs of thousands of digits are fine),
and JSON output renders every integer as a decimal string so consumers
never overflow a machine word.

Exit codes: 0 success, 2 argument parse or validation error, 1 internal
consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import TextIO

from .core import (
    AlmostSquareRecord,
    FlockId,
    count_le,
    enumerate_range,
    flock_members,
    floor_almost_square,
    is_almost_square,
    nth,
    pioneer,
    triangular,
)
from .oracle import DEFAULT_SCAN_CAP, brute_record_set

__all__ = ["build_parser", "main", "run_main"]

_LIST_ROW_CAP = 10_000_000


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ValueError(message)


def _record_fields(rec: AlmostSquareRecord) -> dict[str, str]:
    return {
        "value": str(rec.value),
        "width": str(rec.rect.width),
        "length": str(rec.rect.length),
        "semiperimeter": str(rec.semiperimeter),
        "flock": str(rec.flock.k),
    }


def _print_record(rec: AlmostSquareRecord, fmt: str, out: TextIO) -> None:
    if fmt == "json":
        json.dump(_record_fields(rec), out)
        out.write("\n")
    elif fmt == "csv":
        out.write("value,width,length,semiperimeter,flock\n")
        out.write(
            f"{rec.value},{rec.rect.width},{rec.rect.length},"
            f"{rec.semiperimeter},{rec.flock.k}\n"
        )
    else:
        out.write(
            f"{rec.value} = {rec.rect.width} x {rec.rect.length} "
            f"(semiperimeter {rec.semiperimeter}, flock {rec.flock.k})\n"
        )


def _print_records(recs: list[AlmostSquareRecord], fmt: str, out: TextIO) -> None:
    if fmt == "json":
        json.dump({"members": [_record_fields(r) for r in recs]}, out)
        out.write("\n")
    elif fmt == "csv":
        out.write("value,width,length,semiperimeter,flock\n")
        for r in recs:
            out.write(
                f"{r.value},{r.rect.width},{r.rect.length},"
                f"{r.semiperimeter},{r.flock.k}\n"
            )
    else:
        for r in recs:
            out.write(f"{r.value} = {r.rect.width} x {r.rect.length}\n")


def _as_record(n: int) -> AlmostSquareRecord | None:
    rect = is_almost_square(n)
    if rect is None:
        return None
    fid = FlockId.from_semiperimeter(rect.semiperimeter)
    return AlmostSquareRecord(
        value=n, rect=rect, semiperimeter=rect.semiperimeter, flock=fid
    )


# --------------------------------------------------------------------------
# verb handlers
# --------------------------------------------------------------------------

def cmd_check(args: argparse.Namespace) -> int:
    _require(args.n >= 1, "n must be >= 1")
    out = sys.stdout
    rec = _as_record(args.n)
    if args.format == "json":
        payload: dict[str, object] = {"n": str(args.n), "member": rec is not None}
        if rec is not None:
            payload.update(_record_fields(rec))
        json.dump(payload, out)
        out.write("\n")
    elif args.format == "csv":
        out.write("n,member,width,length,semiperimeter\n")
        if rec is None:
            out.write(f"{args.n},0,,,\n")
        else:
            out.write(
                f"{args.n},1,{rec.rect.width},{rec.rect.length},{rec.semiperimeter}\n"
            )
    else:
        if rec is None:
            out.write(f"{args.n} is not an almost-square\n")
        else:
            out.write(
                f"{args.n} is an almost-square: {rec.rect.width} x {rec.rect.length} "
                f"(semiperimeter {rec.semiperimeter}, flock {rec.flock.k})\n"
            )
    return 0


def cmd_floor(args: argparse.Namespace) -> int:
    _require(args.n >= 1, "n must be >= 1")
    _print_record(floor_almost_square(args.n), args.format, sys.stdout)
    return 0


def cmd_count(args: argparse.Namespace) -> int:
    _require(args.n >= 1, "n must be >= 1")
    value = count_le(args.n)
    if args.format == "json":
        json.dump({"n": str(args.n), "count": str(value)}, sys.stdout)
        sys.stdout.write("\n")
    elif args.format == "csv":
        sys.stdout.write(f"n,count\n{args.n},{value}\n")
    else:
        sys.stdout.write(f"{value}\n")
    return 0


def cmd_nth(args: argparse.Namespace) -> int:
    _require(args.index >= 1, "index must be >= 1")
    _print_record(nth(args.index), args.format, sys.stdout)
    return 0


def cmd_list(args: argparse.Namespace) -> int:
    _require(args.lo >= 1, "lo must be >= 1")
    _require(args.hi >= args.lo, "lo must not exceed hi")
    expected = count_le(args.hi) - (count_le(args.lo - 1) if args.lo > 1 else 0)
    _require(
        expected <= _LIST_ROW_CAP,
        f"range holds {expected} members; use 'count' or 'analyze' instead",
    )
    _print_records(enumerate_range(args.lo, args.hi), args.format, sys.stdout)
    return 0


def cmd_flock(args: argparse.Namespace) -> int:
    _require(args.k >= 1, "flock index k must be >= 1")
    _print_records(flock_members(args.k), args.format, sys.stdout)
    return 0


def cmd_pioneers(args: argparse.Namespace) -> int:
    _require(args.count >= 1, "count must be >= 1")
    rows = []
    for j in range(1, args.count + 1):
        value, fid = pioneer(j)
        rows.append((j, value, triangular(j + 1), triangular(j + 2), fid.k))
    out = sys.stdout
    if args.format == "json":
        json.dump(
            {
                "pioneers": [
                    {
                        "index": str(j),
                        "value": str(v),
                        "width": str(w),
                        "length": str(length),
                        "flock": str(k),
                    }
                    for j, v, w, length, k in rows
                ]
            },
            out,
        )
        out.write("\n")
    elif args.format == "csv":
        out.write("index,value,width,length,flock\n")
        for j, v, w, length, k in rows:
            out.write(f"{j},{v},{w},{length},{k}\n")
    else:
        for j, v, w, length, k in rows:
            out.write(f"{j}: {v} = {w} x {length} (flock {k})\n")
    return 0


def cmd_analyze(args: argparse.Namespace) -> int:
    from .analysis import SamplingPlan, emit_series

    plan = SamplingPlan(
        kind=args.plan,
        lo=args.lo,
        hi=args.hi,
        step=args.step,
        at_members=False if args.grid else None,
        max_rows=args.max_rows,
    )
    emit_series(plan, sys.stdout)
    return 0


def cmd_trigrid(args: argparse.Namespace) -> int:
    from .analysis import SamplingPlan, emit_series

    _require(args.size >= 2, "size must be >= 2")
    plan = SamplingPlan(kind="tri-grid", lo=1, hi=args.size, max_rows=args.max_rows)
    emit_series(plan, sys.stdout)
    return 0


def cmd_oracle_verify(args: argparse.Namespace) -> int:
    limit = args.limit
    _require(limit >= 1, "limit must be >= 1")
    if limit > 50_000:
        t0 = time.perf_counter()
        brute_record_set(10_000)
        dt = time.perf_counter() - t0
        estimate = dt * (limit / 10_000) ** 1.5
        print(
            f"oracle scan estimate: ~{estimate:.0f}s for limit {limit}",
            file=sys.stderr,
        )
    record_set = brute_record_set(limit)
    members = record_set.members
    idx = 0
    running = 0
    membership_bad = 0
    count_bad = 0
    for n in range(1, limit + 1):
        brute_member = idx < len(members) and members[idx] == n
        if brute_member:
            idx += 1
            running += 1
        if (is_almost_square(n) is not None) != brute_member:
            membership_bad += 1
        if count_le(n) != running:
            count_bad += 1
    ok = limit - membership_bad
    print(f"membership: {ok}/{limit} ok, {membership_bad} mismatches")
    ok = limit - count_bad
    print(f"counts:     {ok}/{limit} ok, {count_bad} mismatches")
    return 0 if membership_bad == 0 and count_bad == 0 else 1


# --------------------------------------------------------------------------
# parser
# --------------------------------------------------------------------------

def _add_format(sp: argparse.ArgumentParser) -> None:
    sp.add_argument(
        "--format",
        choices=("text", "json", "csv"),
        default="text",
        help="output format (default text)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="almost-squares",
        description=(
            "Queries about almost-squares: the integers whose optimal "
            "integer-sided rectangle sets or ties the record for the "
            "area-to-semiperimeter ratio."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("check", help="test membership and report the rectangle")
    sp.add_argument("n", type=int, help="integer to test")
    _add_format(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("floor", help="largest almost-square not exceeding n")
    sp.add_argument("n", type=int)
    _add_format(sp)
    sp.set_defaults(func=cmd_floor)

    sp = sub.add_parser("count", help="number of almost-squares not exceeding n")
    sp.add_argument("n", type=int)
    _add_format(sp)
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("nth", help="the j-th almost-square in increasing order")
    sp.add_argument("index", type=int, help="1-based rank")
    _add_format(sp)
    sp.set_defaults(func=cmd_nth)

    sp = sub.add_parser("list", help="all almost-squares in [lo, hi]")
    sp.add_argument("lo", type=int)
    sp.add_argument("hi", type=int)
    _add_format(sp)
    sp.set_defaults(func=cmd_list)

    sp = sub.add_parser("flock", help="members of the flock with semiperimeter k")
    sp.add_argument("k", type=int)
    _add_format(sp)
    sp.set_defaults(func=cmd_flock)

    sp = sub.add_parser("pioneers", help="the first J flock-lengthening members")
    sp.add_argument("count", type=int, help="how many pioneers to print")
    _add_format(sp)
    sp.set_defaults(func=cmd_pioneers)

    sp = sub.add_parser("analyze", help="stream a counting/remainder series as CSV")
    sp.add_argument(
        "--plan",
        required=True,
        choices=("A-of-x", "R-of-x", "R-normalized"),
        help="which series to emit",
    )
    sp.add_argument("--lo", type=int, required=True)
    sp.add_argument("--hi", type=int, required=True)
    sp.add_argument("--step", type=int, default=1, help="grid step (default 1)")
    sp.add_argument(
        "--grid",
        action="store_true",
        help="sample a fixed-step grid instead of the member values",
    )
    sp.add_argument("--max-rows", type=int, default=1_000_000)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser(
        "trigrid", help="stream the triangular-product membership table as CSV"
    )
    sp.add_argument("size", type=int, nargs="?", default=60)
    sp.add_argument("--max-rows", type=int, default=1_000_000)
    sp.set_defaults(func=cmd_trigrid)

    sp = sub.add_parser(
        "oracle-verify",
        help="compare fast membership and counts against the brute-force scan",
    )
    sp.add_argument("--limit", type=int, default=DEFAULT_SCAN_CAP)
    sp.set_defaults(func=cmd_oracle_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)  # answers legitimately run to thousands of digits
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"almost-squares: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"almost-squares: internal check failed: {exc}", file=sys.stderr)
        return 1


def run_main() -> None:
    sys.exit(main())
