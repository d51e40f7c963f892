"""Command-line front end.

All results go to stdout (csv, json, or OEIS b-file); diagnostics go to
stderr.  Exit codes: 0 success, 1 computation/precondition error, 2 usage.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import counting, reciprocal, sequences
from .errors import PrimeSubseqError
from .sieve import build_sieve

DEFAULT_LIMIT_CAP = 10**7

_SELECTORS = {
    "all": sequences.ALL_PRIMES,
    "p-prime": sequences.P_PRIME,
    "p-dprime": sequences.P_DPRIME,
    "twin": sequences.TWIN,
}


def _parse_grid(text: str) -> list[int]:
    """Grid spec: 'paper', a '1e2..1e6' decade range, or a comma list."""
    if text == "paper":
        return reciprocal.paper_grid()
    if ".." in text:
        lo_s, hi_s = text.split("..", 1)
        lo, hi = int(float(lo_s)), int(float(hi_s))
        out = []
        x = lo
        while x <= hi:
            out.append(x)
            x *= 10
        return out
    return [int(float(tok)) for tok in text.split(",") if tok]


def _selector(args) -> sequences.Selector:
    if args.selector == "order":
        return sequences.order(args.order_k)
    return _SELECTORS[args.selector]


def _sieve_limit_guard(x: int, allow_large: bool) -> None:
    if x > DEFAULT_LIMIT_CAP and not allow_large:
        raise PrimeSubseqError(
            f"limit {x} exceeds the default cap {DEFAULT_LIMIT_CAP}; "
            "pass --allow-large to proceed"
        )


def _coerce(tok: str):
    for cast in (int, float):
        try:
            return cast(tok)
        except ValueError:
            continue
    return tok


def _emit_table(header: str, rows: list[str], keys: list[str], fmt: str) -> None:
    if fmt == "csv":
        print(header)
        for row in rows:
            print(row)
    elif fmt == "json":
        payload = [
            dict(zip(keys, (_coerce(tok) for tok in row.split(","))))
            for row in rows
        ]
        print(json.dumps(payload))
    else:
        raise PrimeSubseqError(f"format {fmt!r} not supported for this command")


# -- subcommands -------------------------------------------------------------


def _cmd_gen(args) -> int:
    _sieve_limit_guard(args.limit, args.allow_large)
    sel = _selector(args)
    # Twin membership checks a neighbour 2 above the limit.
    store = build_sieve(args.limit + 2)
    values = sequences.generate(sel, args.method, args.limit, store)
    if args.format == "bfile":
        for line in sequences.bfile_lines(values):
            print(line)
    elif args.format == "csv":
        print("n,value")
        for i, v in enumerate(values, 1):
            print(f"{i},{v}")
    else:
        print(json.dumps(values))
    return 0


def _cmd_count(args) -> int:
    grid = _parse_grid(args.grid) if args.grid else [args.x]
    _sieve_limit_guard(max(grid), args.allow_large)
    store = build_sieve(max(grid) + 2)
    reports = [counting.count_report(x, store) for x in grid]
    _emit_table(
        counting.CountReport.CSV_HEADER,
        [r.csv_row() for r in reports],
        counting.CountReport.CSV_HEADER.split(","),
        args.format,
    )
    return 0


def _cmd_depth(args) -> int:
    store = build_sieve(max(args.n, 2))
    print(sequences.depth(args.n, store))
    return 0


def _cmd_legendre(args) -> int:
    _sieve_limit_guard(args.x, args.allow_large)
    store = build_sieve(max(args.x, 3))
    print(counting.legendre_A(args.x, args.r, store, strategy=args.strategy))
    return 0


def _cmd_bounds(args) -> int:
    grid = _parse_grid(args.grid) if args.grid else [args.x]
    _sieve_limit_guard(max(grid), args.allow_large)
    store = build_sieve(max(grid) + 2)
    sel = _selector(args)
    if args.fit:
        C = counting.fit_constant(sel, grid, store)
    else:
        C = args.C
    cfg = counting.BoundConfig(r=args.r, c=args.c, C=C)
    header = "x,exact,bound_value,C_used"
    rows = []
    for x in grid:
        exact = counting.pi_subseq(sel, x, store)
        bound = counting.bound_eval(sel, x, cfg, args.form, store)
        rows.append(f"{x},{exact},{bound!r},{C!r}")
    _emit_table(header, rows, header.split(","), args.format)
    return 0


def _cmd_recip(args) -> int:
    grid = _parse_grid(args.grid)
    _sieve_limit_guard(max(grid), args.allow_large)
    store = build_sieve(max(grid) + 2)
    conventions = (
        list(reciprocal.TWIN_CONVENTIONS)
        if args.twin_convention == "all"
        else [args.twin_convention]
    )
    tables = {c: reciprocal.table3(grid, store, c) for c in conventions}
    header = "x,sum_p_dprime," + ",".join(f"sum_twin_{c}" for c in conventions)
    rows = []
    for i, x in enumerate(grid):
        dp = tables[conventions[0]][i].sum_dprime
        twins = ",".join(repr(tables[c][i].sum_twin) for c in conventions)
        rows.append(f"{x},{dp!r},{twins}")
    _emit_table(header, rows, header.split(","), args.format)
    print(
        "note: the published twin reciprocal column matches none of the "
        "conventions reported here (pair-both-members, distinct-members, "
        "lesser-only); its convention is undocumented.",
        file=sys.stderr,
    )
    return 0


def _cmd_verify(args) -> int:
    _sieve_limit_guard(args.limit, args.allow_large)
    store = build_sieve(args.limit + 2)
    failures = []

    if not sequences.verify_partition(args.limit, store):
        failures.append("partition")
    for sel in (sequences.P_PRIME, sequences.P_DPRIME):
        outs = [
            sequences.generate(sel, m, args.limit, store)
            for m in sequences.METHODS
        ]
        if not (outs[0] == outs[1] == outs[2]):
            failures.append(f"methods:{sel.kind}")
    if args.limit >= 2 and not counting.check_theorem1(args.limit, store):
        failures.append("theorem1")

    if failures:
        print("verify FAILED: " + ", ".join(failures))
        return 1
    print("partition ok, methods agree, theorem1 ok")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="primesubseq",
        description="Generate, count, and bound the complementary prime subsequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, fmt_choices=("csv", "json")):
        p.add_argument("--format", choices=fmt_choices, default="csv")
        p.add_argument("--allow-large", action="store_true")

    p = sub.add_parser("gen", help="emit sequence members up to a limit")
    p.add_argument("--selector", choices=[*_SELECTORS, "order"], required=True)
    p.add_argument("--order-k", type=int, default=1)
    p.add_argument("--method", choices=sequences.METHODS, default=None)
    p.add_argument("--limit", type=int, required=True)
    add_common(p, ("csv", "json", "bfile"))
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("count", help="exact counts and density predictions")
    p.add_argument("--x", type=int)
    p.add_argument("--grid")
    add_common(p)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("depth", help="prime-iteration depth of n")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_depth)

    p = sub.add_parser("legendre", help="inclusion-exclusion coprime count")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--strategy", choices=("auto", "direct", "recursive"), default="auto")
    p.add_argument("--allow-large", action="store_true")
    p.set_defaults(func=_cmd_legendre)

    p = sub.add_parser("bounds", help="evaluate count upper bounds")
    p.add_argument("--selector", choices=[*_SELECTORS, "order"], required=True)
    p.add_argument("--order-k", type=int, default=1)
    p.add_argument("--x", type=int)
    p.add_argument("--grid")
    p.add_argument("--form", choices=("raw", "final"), default="final")
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--c", type=float, default=5.0)
    p.add_argument("--C", type=float, default=1.0)
    p.add_argument("--fit", action="store_true", help="fit C on the grid first")
    add_common(p)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("recip", help="reciprocal-sum table")
    p.add_argument("--grid", required=True)
    p.add_argument(
        "--twin-convention",
        choices=(*reciprocal.TWIN_CONVENTIONS, "all"),
        default="all",
    )
    add_common(p)
    p.set_defaults(func=_cmd_recip)

    p = sub.add_parser("verify", help="cross-method and partition checks")
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--allow-large", action="store_true")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command in ("count", "bounds") and args.x is None and not args.grid:
        parser.error(f"{args.command} needs --x or --grid")
    try:
        return args.func(args)
    except PrimeSubseqError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
