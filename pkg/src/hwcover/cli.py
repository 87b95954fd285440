"""Batch command-line surface.

Subcommands::

    count      counting table: n, s and c per isomorphism type, with totals
    enumerate  explicit subgroup descriptors at one index
    classes    conjugacy classes at one index (size + representative)
    normal     summary table n,type,s,c,normal
    series     audit of the generating-function table against the counts
    verify     three-way verification report (closed form / catalog / oracle)

Exit codes: 0 success (verify: everything matches), 1 verification mismatch,
2 usage or I/O error.  Output is deterministic byte-for-byte.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import catalog, oracle

_CSV_FIELDS = ["type", "axis", "k", "l", "m", "u", "v", "w",
               "b", "c", "a", "e", "f", "d", "s", "t"]


def _descriptor_csv_row(d: catalog.Descriptor) -> dict:
    obj = catalog.to_json_dict(d)
    return {key: obj.get(key, "") for key in _CSV_FIELDS}


def descriptor_from_csv_row(row: dict) -> catalog.Descriptor:
    obj = {key: val for key, val in row.items() if val != ""}
    return catalog.from_json_dict(obj)


def _write_csv(header: Sequence[str], rows, out) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {path}: {exc}", file=sys.stderr)
        raise SystemExit(2)


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def _cmd_count(args) -> int:
    rows = []
    for n in range(1, args.max + 1):
        s = [catalog.count_s(iso, n) for iso in catalog.ISO_TYPES]
        c = [catalog.count_c(iso, n) for iso in catalog.ISO_TYPES]
        rows.append([n, *s, sum(s), *c, sum(c)])
    if args.format == "json":
        cols = ["n", "s_g1", "s_g2", "s_g6", "s_total", "c_g1", "c_g2", "c_g6", "c_total"]
        _emit(_json_text([dict(zip(cols, row)) for row in rows]), args.out)
    else:
        buf = io.StringIO()
        _write_csv(["n", "s_g1", "s_g2", "s_g6", "s_total",
                    "c_g1", "c_g2", "c_g6", "c_total"], rows, buf)
        _emit(buf.getvalue(), args.out)
    return 0


def _cmd_enumerate(args) -> int:
    if args.type:
        ds = catalog.enumerate_iso(args.type, args.index)
    else:
        ds = catalog.enumerate_index(args.index)
    print(f"enumerate: index={args.index} type={args.type or 'all'} count={len(ds)}",
          file=sys.stderr)
    if args.format == "json":
        _emit(_json_text([catalog.to_json_dict(d) for d in ds]), args.out)
    else:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=_CSV_FIELDS, lineterminator="\n")
        writer.writeheader()
        for d in ds:
            writer.writerow(_descriptor_csv_row(d))
        _emit(buf.getvalue(), args.out)
    return 0


def _cmd_classes(args) -> int:
    if args.type:
        ds = catalog.enumerate_iso(args.type, args.index)
    else:
        ds = catalog.enumerate_index(args.index)
    classes = []
    for iso in catalog.ISO_TYPES:
        members = [d for d in ds if catalog.iso_of(d) == iso]
        classes.extend(catalog.conjugacy_classes(members))
    if args.format == "json":
        payload = [
            {
                "type": catalog.iso_of(cls[0]),
                "size": len(cls),
                "representative": catalog.to_json_dict(cls[0]),
                "members": [catalog.to_json_dict(d) for d in cls],
            }
            for cls in classes
        ]
        _emit(_json_text({"index": args.index, "class_count": len(classes),
                          "classes": payload}), args.out)
    else:
        rows = [
            [args.index, catalog.iso_of(cls[0]), len(cls),
             json.dumps(catalog.to_json_dict(cls[0]), sort_keys=True)]
            for cls in classes
        ]
        buf = io.StringIO()
        _write_csv(["n", "type", "size", "representative"], rows, buf)
        _emit(buf.getvalue(), args.out)
    return 0


def _cmd_normal(args) -> int:
    rows = []
    for n in range(1, args.max + 1):
        normals = dict(zip(catalog.ISO_TYPES, catalog.normal_counts(n)))
        for iso in catalog.ISO_TYPES:
            rows.append([n, iso, catalog.count_s(iso, n), catalog.count_c(iso, n),
                         normals[iso]])
    if args.format == "json":
        cols = ["n", "type", "s", "c", "normal"]
        _emit(_json_text([dict(zip(cols, row)) for row in rows]), args.out)
    else:
        buf = io.StringIO()
        _write_csv(["n", "type", "s", "c", "normal"], rows, buf)
        _emit(buf.getvalue(), args.out)
    return 0


def _cmd_series(args) -> int:
    report = catalog.series_report(args.max)
    if args.out is not None:
        # full coefficient tables alongside the verdicts
        from . import arith
        formulas = catalog.count_arrays(args.max)
        rows = []
        for key in sorted(arith.GF_TABLE):
            table_vals = arith.gf_coeffs(*key, args.max).coeffs
            for n in range(1, args.max + 1):
                rows.append([key[0], key[1], n, table_vals[n - 1], formulas[key][n - 1]])
        buf = io.StringIO()
        _write_csv(["type", "kind", "n", "table_value", "formula_value"], rows, buf)
        _emit(buf.getvalue(), args.out)
    if args.format == "json":
        sys.stdout.write(_json_text(report))
    else:
        buf = io.StringIO()
        rows = [
            [r["type"], r["kind"], r["verdict"], r["first_divergent_n"] or "",
             r.get("note", "")]
            for r in report["rows"]
        ]
        row3 = report["row3_label"]
        _write_csv(["type", "kind", "verdict", "first_divergent_n", "note"], rows, buf)
        buf.write(f"# row 3 label audit: tabulated as {row3['tabulated_label']}; "
                  f"vs g1 s: {row3['vs_g1_s']}; vs g6 s: {row3['vs_g6_s']}\n")
        sys.stdout.write(buf.getvalue())
    return 0


def _cmd_verify(args) -> int:
    reports = [oracle.cross_check(n, oracle_limit=args.oracle_limit)
               for n in range(1, args.max + 1)]
    ok = all(r.all_match for r in reports)
    if args.format == "json":
        _emit(_json_text([r.to_json_dict() for r in reports]), args.out)
    else:
        buf = io.StringIO()
        rows = []
        for r in reports:
            rows.extend(oracle.csv_rows(r))
        _write_csv(oracle.CSV_HEADER.split(","), rows, buf)
        _emit(buf.getvalue(), args.out)
    if not ok:
        bad = [
            f"n={row.n} type={row.iso}"
            for r in reports for row in r.rows if not row.match
        ] + [
            f"n={r.n} tables_bijective=false"
            for r in reports if r.tables_bijective is False
        ]
        print("verify: MISMATCH at " + "; ".join(bad), file=sys.stderr)
        return 1
    print(f"verify: all cells match for n <= {args.max} "
          f"(oracle columns for n <= {min(args.max, args.oracle_limit)})",
          file=sys.stderr)
    return 0


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------

def _positive(text: str) -> int:
    val = int(text)
    if val < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return val


def _oracle_limit(text: str) -> int:
    val = int(text)
    if val < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    if val > oracle.HARD_CAP:
        raise argparse.ArgumentTypeError(
            f"oracle limit capped at {oracle.HARD_CAP} to bound runtime"
        )
    return val


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hwcover",
        description="Count and classify the finite-sheeted coverings of the "
                    "Hantzsche-Wendt manifold.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", metavar="PATH", default=None)

    p = sub.add_parser("count", help="counting table for 1 <= n <= MAX")
    p.add_argument("--max", type=_positive, required=True)
    add_common(p)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("enumerate", help="explicit descriptors at one index")
    p.add_argument("--index", type=_positive, required=True)
    p.add_argument("--type", choices=catalog.ISO_TYPES, default=None)
    add_common(p)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("classes", help="conjugacy classes at one index")
    p.add_argument("--index", type=_positive, required=True)
    p.add_argument("--type", choices=catalog.ISO_TYPES, default=None)
    add_common(p)
    p.set_defaults(func=_cmd_classes)

    p = sub.add_parser("normal", help="summary n,type,s,c,normal for n <= MAX")
    p.add_argument("--max", type=_positive, required=True)
    add_common(p)
    p.set_defaults(func=_cmd_normal)

    p = sub.add_parser("series", help="generating-function audit up to MAX")
    p.add_argument("--max", type=_positive, required=True)
    add_common(p)
    p.set_defaults(func=_cmd_series)

    p = sub.add_parser("verify", help="three-way verification for n <= MAX")
    p.add_argument("--max", type=_positive, required=True)
    p.add_argument("--oracle-limit", type=_oracle_limit,
                   default=oracle.DEFAULT_ORACLE_LIMIT)
    add_common(p)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
