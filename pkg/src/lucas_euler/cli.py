"""Command-line front end.

Exit status: 0 when every check passes, 1 when a check fails, 2 for usage,
parse or I/O errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional, Sequence

from . import __version__
from .bfile import FAMILIES, BFileError, load_fixture, oeis_check, read_bfile
from .catalog import CATALOG, DomainError, Grid, UnknownIdentity, check_identity, list_identities
from .egf import DEFAULT_ORDER
from .gfcheck import GF_EQUATIONS, check_gf_equation
from .results import Report, render
from .sequences import default_cache

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

TABLE_FAMILIES = {
    "fibonacci": default_cache.fibonacci,
    "lucas": default_cache.lucas,
    "balancing": lambda n: default_cache.balancing_poly(n)(1),
    "lucas_balancing": lambda n: default_cache.lucas_balancing_poly(n)(1),
    "balancing_poly": default_cache.balancing_poly,
    "lucas_balancing_poly": default_cache.lucas_balancing_poly,
    "bernoulli": default_cache.bernoulli_number,
    "euler": default_cache.euler_number,
    "bernoulli_poly": default_cache.bernoulli_poly,
    "euler_poly": default_cache.euler_poly,
    "euler_at_zero": default_cache.euler_at_zero,
    "lambda_power": default_cache.lambda_power,
}


class UsageError(Exception):
    pass


def _split_ids(values: Sequence[str]) -> list[str]:
    out = []
    for v in values:
        out.extend(x for x in v.split(",") if x)
    return out


def _q_set(text: str) -> tuple:
    try:
        return tuple(int(q) for q in text.split(",") if q)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad q set {text!r}") from None


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {out}: {exc}") from None


def _emit_report(report: Report, fmt: str, out: Optional[str]) -> int:
    text = {"json": report.to_json, "csv": report.to_csv, "text": report.to_text}[fmt]()
    _emit(text, out)
    return EXIT_OK if report.ok else EXIT_FAIL


def _emit_rows(rows: list[dict], fmt: str, out: Optional[str]) -> None:
    if fmt == "json":
        _emit(json.dumps(rows, indent=2) + "\n", out)
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(rows[0]) if rows else [], lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        _emit(buf.getvalue(), out)
    else:
        _emit("".join("  ".join(str(v) for v in r.values()) + "\n" for r in rows), out)


def cmd_verify(args) -> int:
    ids = _split_ids(args.ids or []) + _split_ids(args.identities)
    if not ids or "all" in ids:
        ids = list(CATALOG)
    unknown = [i for i in ids if i not in CATALOG]
    if unknown:
        raise UnknownIdentity(", ".join(unknown))
    grid = Grid(n_max=args.n_max, j_max=args.j_max, s_max=args.s_max, q_set=args.q_set)
    report = Report(results=[check_identity(i, grid) for i in ids])
    return _emit_report(report, args.format, args.out)


def cmd_list(args) -> int:
    rows = [{"id": i, "anchor": a, "ring": r, "domain": d} for i, a, r, d in list_identities()]
    if args.gf:
        rows = [
            {"id": e.id, "anchor": e.statement, "ring": e.kind, "domain": f"order <= {e.default_order}"}
            for e in GF_EQUATIONS.values()
        ]
    _emit_rows(rows, args.format, args.out)
    return EXIT_OK


def cmd_table(args) -> int:
    fn = TABLE_FAMILIES[args.family]
    rows = [{"n": n, "value": render(fn(n))} for n in range(args.n_max + 1)]
    _emit_rows(rows, args.format, args.out)
    return EXIT_OK


def cmd_gf_check(args) -> int:
    ids = _split_ids(args.ids or []) + _split_ids(args.equations)
    if not ids or "all" in ids:
        ids = list(GF_EQUATIONS)
    unknown = [i for i in ids if i not in GF_EQUATIONS]
    if unknown:
        raise UnknownIdentity(", ".join(unknown))
    report = Report(results=[check_gf_equation(i, args.order, j_max=args.j_max) for i in ids])
    return _emit_report(report, args.format, args.out)


def cmd_oeis_check(args) -> int:
    families = args.families or list(FAMILIES)
    unknown = [f for f in families if f not in FAMILIES]
    if unknown:
        raise UsageError(f"unknown family {', '.join(unknown)}; choose from {', '.join(FAMILIES)}")
    if args.bfile and len(families) != 1:
        raise UsageError("--bfile needs exactly one family")
    results = []
    for fam in families:
        bfile = read_bfile(args.bfile) if args.bfile else load_fixture(fam)
        results.append(oeis_check(fam, bfile))
    return _emit_report(Report(results=results), args.format, args.out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lucas-euler", description="Exact verification of Lucas-Euler and balancing-polynomial identities."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def output_flags(p, default_format="text"):
        p.add_argument("--format", choices=("json", "csv", "text"), default=default_format)
        p.add_argument("--out", metavar="PATH", help="write to PATH instead of stdout")

    p = sub.add_parser("verify", help="check catalog identities on a parameter grid")
    p.add_argument("identities", nargs="*", help="identity ids, or 'all' (default)")
    p.add_argument("--ids", action="append", help="comma-separated identity ids")
    p.add_argument("--n-max", type=int, default=None, help="largest n (default 20; 12 for euler_mult)")
    p.add_argument("--j-max", type=int, default=6)
    p.add_argument("--s-max", type=int, default=6)
    p.add_argument("--q-set", type=_q_set, default=(3, 5, 7), help="comma-separated odd q values")
    output_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("list", help="list identity ids")
    p.add_argument("--gf", action="store_true", help="list generating-function equations instead")
    output_flags(p)
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("table", help="print a sequence or polynomial family for 0 <= n <= N")
    p.add_argument("family", choices=sorted(TABLE_FAMILIES))
    p.add_argument("--n-max", type=int, default=10)
    output_flags(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("gf-check", help="check generating-function equations coefficientwise")
    p.add_argument("equations", nargs="*", help="equation ids, or 'all' (default)")
    p.add_argument("--ids", action="append", help="comma-separated equation ids")
    p.add_argument("--order", type=int, default=None, help=f"truncation order (default {DEFAULT_ORDER}, 12 for definitions)")
    p.add_argument("--j-max", type=int, default=6)
    output_flags(p)
    p.set_defaults(func=cmd_gf_check)

    p = sub.add_parser("oeis-check", help="compare families with OEIS b-files")
    p.add_argument("families", nargs="*", metavar="FAMILY", help=f"one of {', '.join(FAMILIES)} (default: all)")
    p.add_argument("--bfile", metavar="PATH", help="user-supplied b-file (one family only)")
    output_flags(p)
    p.set_defaults(func=cmd_oeis_check)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "n_max", None) is not None and args.n_max < 0:
        parser.error("--n-max must be >= 0")
    try:
        return args.func(args)
    except UnknownIdentity as exc:
        print(f"error: unknown id {exc.args[0]}", file=sys.stderr)
    except (DomainError, BFileError, UsageError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
