"""Command-line surface: tables, single evaluations, identity verification.

Output is deterministic JSON lines or CSV so runs are golden-file testable;
diagnostics go to stderr.  Exit codes: 0 success / all identities pass,
1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from fractions import Fraction

from .classical import XPolynomial, bell_poly, r_s2, s1, s2
from .degenerate import bell_deg_poly, bell_ext_poly, s2_deg, s2_ext
from .scalars import ScalarRing, SYMBOLIC, fixed_ring, parse_rational, scalar_to_jsonable
from .series import deg_exp, ps_binom_lambda, ps_dlog
from .verifier import NUMERIC_IDS, GridSpec, list_identities, run_suite

FAMILIES = ("s1", "s2", "r_s2", "s2_deg", "s2_ext", "bell", "bell_deg", "bell_ext")

# Families whose rows range over (n, k); the rest emit one polynomial per n.
_TRIANGLE_FAMILIES = frozenset({"s1", "s2", "r_s2", "s2_deg", "s2_ext"})
_LAMBDA_FAMILIES = frozenset({"s2_deg", "s2_ext", "bell_deg", "bell_ext"})
_R_FAMILIES = frozenset({"r_s2", "s2_ext", "bell_ext"})

CSV_COLUMNS = ("family", "n", "k", "r", "lambda", "x", "value")


class CliError(Exception):
    """Usage-level problem; rendered on stderr with exit code 2."""


def _ring_from_label(label: str) -> ScalarRing:
    if label == "symbolic":
        return SYMBOLIC
    try:
        return fixed_ring(parse_rational(label))
    except ValueError:
        raise CliError(f"malformed lambda value {label!r}") from None


def _parse_x(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError:
        raise CliError(f"malformed x value {text!r}") from None


def _grid_cap() -> int:
    raw = os.environ.get("DEGEN_MAX_N")
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise CliError(f"DEGEN_MAX_N must be an integer, got {raw!r}") from None


def _check_cap(n_max: int):
    cap = _grid_cap()
    if cap is not None and n_max > cap:
        raise CliError(f"n_max {n_max} exceeds DEGEN_MAX_N={cap}")


def make_record(family: str, n: int, *, k=None, r=None, lam=None, x=None, value):
    """OutputRecord as a plain ordered dict; None fields serialize as null."""
    return {
        "family": family,
        "n": n,
        "k": k,
        "r": r,
        "lambda": lam,
        "x": x,
        "value": value,
    }


def record_to_csv_row(record: dict) -> list:
    row = []
    for key in CSV_COLUMNS:
        value = record[key]
        if value is None:
            row.append("")
        elif isinstance(value, list):
            row.append(json.dumps(value, separators=(",", ":")))
        else:
            row.append(str(value))
    return row


def record_from_csv_row(row: list) -> dict:
    rec = dict(zip(CSV_COLUMNS, row))
    for key in ("n", "k", "r"):
        rec[key] = int(rec[key]) if rec[key] != "" else None
    for key in ("lambda", "x"):
        rec[key] = rec[key] if rec[key] != "" else None
    if rec["value"].startswith("["):
        rec["value"] = json.loads(rec["value"])
    return rec


def record_from_json(line: str) -> dict:
    data = json.loads(line)
    return {key: data.get(key) for key in CSV_COLUMNS}


def _emit_records(records: list, fmt: str):
    if fmt == "json":
        for record in records:
            sys.stdout.write(json.dumps(record) + "\n")
    else:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for record in records:
            writer.writerow(record_to_csv_row(record))


def _family_value(family: str, ring: ScalarRing, n: int, k, r):
    """Raw library value for one table/eval cell."""
    if family == "s1":
        return Fraction(s1(n, k))
    if family == "s2":
        return Fraction(s2(n, k))
    if family == "r_s2":
        return Fraction(r_s2(n, k, r))
    if family == "s2_deg":
        return s2_deg(ring, n, k)
    if family == "s2_ext":
        return s2_ext(ring, n, k, r).value
    if family == "bell":
        return bell_poly(n)
    if family == "bell_deg":
        return bell_deg_poly(ring, n).poly
    return bell_ext_poly(ring, n, r).poly


def _encode(value):
    if isinstance(value, XPolynomial):
        return value.to_jsonable()
    return scalar_to_jsonable(value)


def _record_for(family: str, ring: ScalarRing, n: int, k, r, x=None):
    value = _family_value(family, ring, n, k, r)
    lam = ring.label() if family in _LAMBDA_FAMILIES else None
    out_r = r if family in _R_FAMILIES else None
    if x is not None:
        value = value(x)
        return make_record(
            family, n, k=k, r=out_r, lam=lam, x=str(x), value=_encode(value)
        )
    return make_record(family, n, k=k, r=out_r, lam=lam, value=_encode(value))


def cmd_table(args) -> int:
    if args.n_max < 0:
        raise CliError("--n-max must be nonnegative")
    _check_cap(args.n_max)
    ring = _ring_from_label(args.lam)
    if args.r < 0:
        raise CliError("--r must be nonnegative")
    records = []
    for n in range(args.n_max + 1):
        if args.family in _TRIANGLE_FAMILIES:
            for k in range(n + 1):
                records.append(_record_for(args.family, ring, n, k, args.r))
        else:
            records.append(_record_for(args.family, ring, n, None, args.r))
    _emit_records(records, args.format)
    return 0


def cmd_eval(args) -> int:
    ring = _ring_from_label(args.lam)
    family = args.family
    k = args.k
    if family in _TRIANGLE_FAMILIES and k is None:
        raise CliError(f"family {family} requires --k")
    r = args.r if args.r is not None else 0
    if args.n < 0 or (k is not None and k < 0) or r < 0:
        raise CliError("indices must be nonnegative")
    x = None
    if args.x is not None:
        if family not in ("bell", "bell_deg", "bell_ext"):
            raise CliError("--x applies only to Bell polynomial families")
        x = _parse_x(args.x)
    try:
        record = _record_for(family, ring, args.n, k, r, x=x)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    _emit_records([record], args.format)
    return 0


def cmd_verify(args) -> int:
    if args.n_max < 0:
        raise CliError("--n-max must be nonnegative")
    _check_cap(args.n_max)
    if args.r < 0:
        raise CliError("--r must be nonnegative")
    if args.tol <= 0:
        raise CliError("--tol must be positive")
    labels = tuple(part.strip() for part in args.lam.split(",") if part.strip())
    if not labels:
        raise CliError("--lambda must name at least one value")
    for label in labels:
        _ring_from_label(label)
    ids_arg = args.ids.strip()
    if ids_arg == "all":
        ids = None
    else:
        ids = [part.strip() for part in ids_arg.split(",") if part.strip()]
        if not ids:
            raise CliError("--ids must name at least one identity or 'all'")
    grid = GridSpec(n_max=args.n_max, r_max=args.r, lambdas=labels, tol=args.tol)
    try:
        reports = run_suite(ids, grid)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    if args.format == "json":
        for report in reports:
            sys.stdout.write(
                json.dumps(report.to_jsonable(include_elapsed=False)) + "\n"
            )
    else:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(("identity", "checked", "failures", "status"))
        for report in reports:
            writer.writerow(
                (report.identity.value, report.checked, len(report.failures),
                 report.status)
            )
    return 0 if all(not report.failures for report in reports) else 1


def cmd_identities(args) -> int:
    for identity, statement, location in list_identities():
        sys.stdout.write(
            json.dumps(
                {
                    "id": identity.value,
                    "statement": statement,
                    "location": location,
                    "numeric": identity in NUMERIC_IDS,
                }
            )
            + "\n"
        )
    return 0


def cmd_series(args) -> int:
    if args.order < 0:
        raise CliError("--order must be nonnegative")
    ring = _ring_from_label(args.lam)
    if args.kind == "dlog":
        series = ps_dlog(ring, args.order)
    elif args.kind == "deg-exp":
        series = deg_exp(ring, args.order)
    else:
        series = ps_binom_lambda(ring, parse_rational(args.a), args.order)
    sys.stdout.write(
        json.dumps(
            {
                "kind": args.kind,
                "lambda": ring.label(),
                "order": args.order,
                "coefficients": series.to_jsonable(),
            }
        )
        + "\n"
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degenbell",
        description="Exact Stirling/Bell computations with identity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="emit a family triangle/sequence")
    table.add_argument("--family", required=True, choices=FAMILIES)
    table.add_argument("--n-max", type=int, default=10, dest="n_max")
    table.add_argument("--r", type=int, default=0)
    table.add_argument("--lambda", default="0", dest="lam",
                       help='rational "p/q" or "symbolic"')
    table.add_argument("--format", choices=("json", "csv"), default="json")
    table.set_defaults(func=cmd_table)

    ev = sub.add_parser("eval", help="evaluate a single value")
    ev.add_argument("--family", required=True, choices=FAMILIES)
    ev.add_argument("--n", type=int, required=True)
    ev.add_argument("--k", type=int, default=None)
    ev.add_argument("--r", type=int, default=None)
    ev.add_argument("--lambda", default="0", dest="lam")
    ev.add_argument("--x", default=None,
                    help="evaluate a Bell polynomial at this rational")
    ev.add_argument("--format", choices=("json", "csv"), default="json")
    ev.set_defaults(func=cmd_eval)

    verify = sub.add_parser("verify", help="run identity checks")
    verify.add_argument("--ids", default="all",
                        help='comma-separated identity ids, or "all"')
    verify.add_argument("--n-max", type=int, default=10, dest="n_max")
    verify.add_argument("--r", type=int, default=3, help="largest r in the grid")
    verify.add_argument("--lambda", default="0,1,1/2,-1/3,symbolic", dest="lam",
                        help="comma-separated lambda values; may include symbolic")
    verify.add_argument("--tol", type=float, default=1e-9,
                        help="tolerance for the numeric identities")
    verify.add_argument("--format", choices=("json", "csv"), default="json")
    verify.set_defaults(func=cmd_verify)

    ids = sub.add_parser("identities", help="list the identity catalogue")
    ids.set_defaults(func=cmd_identities)

    series = sub.add_parser("series", help="debug: dump a generating series")
    series.add_argument("--kind", required=True,
                        choices=("dlog", "deg-exp", "binom"))
    series.add_argument("--a", default="1", help="exponent numerator for binom")
    series.add_argument("--order", type=int, default=8)
    series.add_argument("--lambda", default="0", dest="lam")
    series.set_defaults(func=cmd_series)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except CliError as exc:
        print(f"degenbell: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError) as exc:
        print(f"degenbell: {exc}", file=sys.stderr)
        return 2


def console_main():
    raise SystemExit(main())
