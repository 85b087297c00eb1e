"""Command-line interface.

    python -m modorbits count 11
    python -m modorbits table --max 100 --format csv
    python -m modorbits enumerate 11 --set a+
    python -m modorbits reduce 5 1 2
    python -m modorbits same-orbit 6 0 1 0 2
    python -m modorbits verify --max 100 --oracle --depth 8

Exit status: 0 success, 1 a mathematical violation was found, 2 bad input.
Negative a or c may need a ``--`` first, e.g. ``reduce -- 5 -1 -2``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import enumeration as en
from . import oracle, orbits, sweep
from .arith import squarefree_upto
from .core import check_modulus, make_signature
from .errors import NotDivisible, NotSquareFree

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2
TABLE_HEADER = ("n", "t_plus", "d", "orbits")
FORMATS = ("table", "csv", "json")


def render(header, rows, fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue()
    cells = [[str(x) for x in header]] + [[str(x) for x in r] for r in rows]
    widths = [max(len(row[k]) for row in cells) for k in range(len(header))]
    lines = ["  ".join(v.rjust(w) for v, w in zip(row, widths)) for row in cells]
    return "\n".join(lines) + "\n"


def dump_json(obj) -> str:
    return json.dumps(obj) + "\n"


def _report_rows(reports):
    return [r.table_row() for r in reports]


def cmd_count(args, out) -> int:
    report = orbits.verify_report(args.n)
    if args.format == "json":
        out.write(dump_json(report.to_json()))
    elif args.format == "csv":
        out.write(render(TABLE_HEADER, [report.table_row()], "csv"))
    else:
        data = report.to_json()
        data["orbits"] = report.count_triples
        width = max(map(len, data))
        for k, v in data.items():
            out.write(f"{k.ljust(width)}  {v}\n")
    return EXIT_OK if report.ok else EXIT_VIOLATION


def table_reports(max_n: int):
    if max_n > 1000:
        return sweep.sweep_reports(max_n)
    return [orbits.verify_report(n) for n in squarefree_upto(max_n)]


def cmd_table(args, out) -> int:
    reports = table_reports(args.max)
    if args.format == "json":
        out.write(dump_json([dict(zip(TABLE_HEADER, r.table_row())) for r in reports]))
    else:
        out.write(render(TABLE_HEADER, _report_rows(reports), args.format))
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    kind = en.SetKind(args.set)
    n = args.n
    if kind is en.SetKind.T_PLUS:
        triples = en.t_plus(n)
        if args.format == "json":
            out.write(dump_json({"n": n, "kind": kind.label, "triples": [t.to_json() for t in triples]}))
        else:
            rows = [(n, kind.label, k, *s.abc) for k, t in enumerate(triples) for s in t]
            out.write(render(("n", "kind", "triple", "a", "b", "c"), rows, args.format))
        return EXIT_OK
    sets = {
        en.SetKind.A_PLUS: en.a_plus,
        en.SetKind.A_MINUS: en.a_minus,
        en.SetKind.NORM_ZERO: en.norm_zero,
        en.SetKind.DIAGONAL: en.diagonal,
    }
    result = sets[kind](n)
    if args.format == "json":
        out.write(dump_json(result.to_json()))
    else:
        out.write(render(("n", "kind", "a", "b", "c"), result.csv_rows(), args.format))
    return EXIT_OK


def cmd_reduce(args, out) -> int:
    s = make_signature(args.n, args.a, args.c)
    d = orbits.descend(s)
    if args.format == "json":
        out.write(
            dump_json(
                {
                    "input": s.to_json(),
                    "rep": d.rep.to_json(),
                    "iterations": d.iterations,
                    "word": ".".join(g.value for g in d.word),
                    "trace": [k.value for k in d.classes],
                }
            )
        )
    else:
        out.write(f"{d.rep}\n")
        out.write(f"input {s} iterations {d.iterations} word {'.'.join(g.value for g in d.word) or '(empty)'}\n")
        out.write("trace " + " -> ".join(k.value for k in d.classes) + "\n")
    return EXIT_OK


def cmd_same_orbit(args, out) -> int:
    s1 = make_signature(args.n, args.a1, args.c1)
    s2 = make_signature(args.n, args.a2, args.c2)
    r1, r2 = orbits.reduce(s1), orbits.reduce(s2)
    same = r1 == r2
    if args.format == "json":
        out.write(dump_json({"n": args.n, "same": same, "rep1": r1.to_json(), "rep2": r2.to_json()}))
    else:
        out.write(f"{'true' if same else 'false'}\n{s1} -> {r1}\n{s2} -> {r2}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    reports = sweep.sweep_reports(args.max)
    violations = [v for r in reports for v in r.violations]
    verdicts = []
    if args.oracle:
        for r in reports:
            v = oracle.oracle_check(r.n, args.depth, args.samples)
            verdicts.append(v)
            if not v.passed:
                violations.append(v.summary)
    summary = f"checked {len(reports)} moduli, {len(violations)} violations"
    if args.format == "json":
        out.write(
            dump_json(
                {
                    "checked": len(reports),
                    "violations": violations,
                    "reports": [r.to_json() for r in reports],
                    "oracle": [v.to_json() for v in verdicts],
                }
            )
        )
    else:
        for line in violations:
            out.write(line + "\n")
        out.write(summary + "\n")
    return EXIT_VIOLATION if violations else EXIT_OK


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {value}")
    return value


def modulus(text: str) -> int:
    n = positive_int(text)
    try:
        check_modulus(n)
    except NotSquareFree as exc:
        raise argparse.ArgumentTypeError(str(exc))
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="modorbits", description="Orbits of PSL(2,Z) on M_{-n}.")
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=FORMATS, default="table")

    p = sub.add_parser("count", help="orbit count and consistency report for one n")
    p.add_argument("n", type=modulus)
    fmt(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", help="n, |T+|, d, orbits for square-free n <= max")
    p.add_argument("--max", type=positive_int, required=True)
    fmt(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("enumerate", help="list a finite signature set")
    p.add_argument("n", type=modulus)
    p.add_argument("--set", required=True, choices=[k.value for k in en.SetKind])
    fmt(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("reduce", help="canonical representative of (a + sqrt(-n))/c")
    p.add_argument("n", type=modulus)
    p.add_argument("a", type=int)
    p.add_argument("c", type=int)
    fmt(p)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("same-orbit", help="whether two elements share an orbit")
    p.add_argument("n", type=modulus)
    for name in ("a1", "c1", "a2", "c2"):
        p.add_argument(name, type=int)
    fmt(p)
    p.set_defaults(func=cmd_same_orbit)

    p = sub.add_parser("verify", help="check every law for all square-free n <= max")
    p.add_argument("--max", type=positive_int, required=True)
    p.add_argument("--oracle", action="store_true", help="also run the brute-force oracle per n")
    p.add_argument("--depth", type=int, default=8)
    p.add_argument("--samples", type=int, default=20)
    fmt(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (NotDivisible, NotSquareFree, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
