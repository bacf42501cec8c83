"""Command-line surface: regenerate the reference tables, export netlists,
and audit the errata registry.

Subcommands
-----------
field table     power/polynomial/vector table of a field
minpolys        conjugacy classes and their minimal polynomials
bases           standard/dual/normal coordinates of every element
constmul        constant-multiplier equations, netlist, or gate count
mastrovito      product matrix of a fixed element, or the general netlist
lfsr divide     polynomial division trace on the divider register
code analyze    distance/rate report for a block code read from a file
report gates    per-constant XOR counts, or the trinomial complexity table
errata          published-vs-computed discrepancy registry

Every subcommand takes ``--format table|csv|json`` (netlists render in
their own text format; ``json`` wraps them).  Exit codes: 0 success,
2 invalid input, 3 internal invariant breach.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import algebra, code_metrics, mastrovito
from . import lfsr as lfsr_mod
from .errata import ERRATA
from .errors import Gf2mError
from .field import GF2m
from .polynomial import Gf2Poly

__all__ = ["main", "build_parser"]


# -- rendering helpers -------------------------------------------------------

def render_table(headers: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    cells = [list(headers)] + [[str(c) for c in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(headers))]

    def line(row: Sequence[str]) -> str:
        return " | ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip()

    out = [line(cells[0]), line(["-" * w for w in widths])]
    out += [line(row) for row in cells[1:]]
    return "\n".join(out) + "\n"


def render_csv(headers: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(headers)
    writer.writerows(rows)
    return buf.getvalue()


def render_json(obj: object) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _power_label(label: str) -> str:
    return label if label == "-" else f"α^{label}"


def _make_field(m: int, poly_text: str | None = None) -> GF2m:
    poly = Gf2Poly.parse(poly_text) if poly_text else None
    return GF2m(m, poly)


# -- subcommand handlers (each returns the full output string) ---------------

def cmd_field_table(args: argparse.Namespace) -> str:
    field = _make_field(args.m, args.poly)
    rows = field.table_rows()
    if args.format == "json":
        return render_json({
            "m": field.m,
            "prime_poly": field.prime_poly.to_binary(),
            "rows": [{"power": p, "polynomial": q, "vector": v}
                     for p, q, v in rows],
        })
    headers = ["power", "polynomial", "vector"]
    render = render_csv if args.format == "csv" else render_table
    return render(headers, rows)


def cmd_minpolys(args: argparse.Namespace) -> str:
    field = _make_field(args.m)
    entries = []
    seen: set[int] = set()
    zero_mp = algebra.minimal_polynomial(field.zero)
    entries.append((("-",), zero_mp))
    for e in range(field.order - 1):
        if field.alpha(e).bits in seen:
            continue
        cls = algebra.conjugacy_class(field.alpha(e))
        seen.update(member.bits for member in cls.members)
        labels = tuple(f"α^{e}" for e in sorted(
            member.power.exponent for member in cls.members))
        entries.append((labels, algebra.minimal_polynomial(cls.representative)))
    if args.format == "json":
        return render_json({
            "m": field.m,
            "classes": [{
                "elements": list(labels),
                "minimal_polynomial": mp.to_terms("X", ascending=True,
                                                  spaced=True),
                "binary": mp.to_binary(),
            } for labels, mp in entries],
        })
    headers = ["elements", "minimal polynomial", "binary"]
    rows = [(", ".join(labels),
             mp.to_terms("X", ascending=True, spaced=True),
             mp.to_binary())
            for labels, mp in entries]
    render = render_csv if args.format == "csv" else render_table
    return render(headers, rows)


def cmd_bases(args: argparse.Namespace) -> str:
    field = _make_field(args.m)
    table = algebra.basis_table(field)
    packed = [(_power_label(label),
               "".join(map(str, t.standard)),
               "".join(map(str, t.dual)),
               "".join(map(str, t.normal)))
              for label, t in table]
    if args.format == "json":
        standard = tuple(field.alpha(k) if k else field.one
                         for k in range(field.m))
        return render_json({
            "m": field.m,
            "dual_basis": [e.vector_str()
                           for e in algebra.find_dual_basis(standard)],
            "normal_basis": [str(e.power)
                             for e in algebra.normal_basis(field)],
            "rows": [{"power": p, "standard": s, "dual": d, "normal": n}
                     for p, s, d, n in packed],
        })
    headers = ["power", "standard", "dual", "normal"]
    render = render_csv if args.format == "csv" else render_table
    return render(headers, packed)


def cmd_constmul(args: argparse.Namespace) -> str:
    field = _make_field(args.m)
    power = args.power
    if args.emit == "netlist":
        return _netlist_output(
            mastrovito.emit_netlist(
                mastrovito.constant_mul_matrix(field, power)),
            args.format)
    equations = mastrovito.constant_equations(field, power)
    count = mastrovito.xor_count(mastrovito.constant_mul_matrix(field, power))
    estimate = mastrovito.xor_count_estimate(field.m)
    if args.emit == "count":
        if args.format == "json":
            return render_json({"m": field.m, "power": power,
                                "xor_count": count, "estimate": str(estimate)})
        if args.format == "csv":
            return render_csv(["key", "value"],
                              [("xor_count", str(count)),
                               ("estimate", str(estimate))])
        return f"xor_count = {count}\nestimate = {estimate}\n"
    if args.format == "json":
        return render_json({"m": field.m, "power": power,
                            "equations": equations,
                            "xor_count": count, "estimate": str(estimate)})
    if args.format == "csv":
        return render_csv(["output", "terms"],
                          [eq.split(" = ", 1) for eq in equations])
    return "\n".join(equations) + "\n"


def _netlist_output(netlist, fmt: str) -> str:
    if fmt == "json":
        return render_json(netlist.to_json())
    if fmt == "csv":
        raise Gf2mError("netlists have no csv form; use table or json")
    return netlist.serialize()


def cmd_mastrovito(args: argparse.Namespace) -> str:
    field = _make_field(args.m)
    a = field.element(args.a)
    if args.emit == "netlist":
        return _netlist_output(mastrovito.general_multiplier_netlist(field),
                               args.format)
    if args.emit == "symbolic":
        sym = mastrovito.symbolic_z_matrix(field)
        cell = lambda ks: " + ".join(f"a{k}" for k in ks) if ks else "0"
        if args.format == "json":
            return render_json({"m": field.m,
                                "entries": [[list(ks) for ks in row]
                                            for row in sym]})
        headers = ["row"] + [f"b{j}" for j in range(field.m)]
        rows = [[f"z{i}"] + [cell(ks) for ks in sym[i]]
                for i in range(field.m)]
        render = render_csv if args.format == "csv" else render_table
        return render(headers, rows)
    z = mastrovito.build_z_matrix(a)
    bits = ["".join(str(z.entry(i, j)) for j in range(field.m))
            for i in range(field.m)]
    equations = []
    for i in range(field.m):
        terms = z.row_terms(i)
        rhs = " + ".join(f"b{j}" for j in terms) if terms else "0"
        equations.append(f"z{i} = {rhs}")
    if args.format == "json":
        return render_json({"m": field.m, "a": a.vector_str(),
                            "rows": bits, "equations": equations})
    headers = ["row", "bits", "equation"]
    rows = [(f"z{i}", bits[i], equations[i]) for i in range(field.m)]
    render = render_csv if args.format == "csv" else render_table
    return render(headers, rows)


def cmd_lfsr_divide(args: argparse.Namespace) -> str:
    g = Gf2Poly.parse(args.g)
    p = Gf2Poly.parse(args.p)
    remainder, trace = lfsr_mod.divide(p, g)
    d = g.bits.bit_length() - 1
    headers = ["clock", "input"] + [f"X{i}" for i in range(d)]
    rows = [["0", "-"] + ["0"] * d]
    rows += [[str(r.clock), str(r.input_bit)] + [str(b) for b in r.regs_after]
             for r in trace]
    remainder_line = (f"remainder = {remainder.to_binary()} "
                      f"({remainder.to_terms('X')})\n")
    if args.format == "json":
        return render_json({
            "g": g.to_binary(), "p": p.to_binary(),
            "remainder": remainder.to_binary(),
            "remainder_terms": remainder.to_terms("X"),
            "rows": [{"clock": r.clock, "input": r.input_bit,
                      "regs": list(r.regs_after)} for r in trace],
        })
    if args.trace == "csv" or (args.trace is None and args.format == "csv"):
        return render_csv(headers, rows)
    if args.trace == "table":
        return render_table(headers, rows) + remainder_line
    return remainder_line


def cmd_code_analyze(args: argparse.Namespace) -> str:
    try:
        with open(args.words, encoding="utf-8") as fh:
            lines = [ln.strip() for ln in fh]
    except OSError as exc:
        raise Gf2mError(f"cannot read {args.words}: {exc}") from None
    words = [ln for ln in lines if ln and not ln.startswith("#")]
    book = code_metrics.CodeBook.from_words(words, k=args.k)
    report = code_metrics.analyze(book)
    items = [(key, str(value)) for key, value in report.items()
             if value is not None]
    if args.format == "json":
        return render_json({key: value for key, value in items})
    if args.format == "csv":
        return render_csv(["key", "value"], items)
    return "".join(f"{key} = {value}\n" for key, value in items)


def cmd_report_gates(args: argparse.Namespace) -> str:
    if args.k is not None:
        return _complexity_output(args)
    field = _make_field(args.m)
    estimate = mastrovito.xor_count_estimate(field.m)
    counts = [(f"α^{i}",
               mastrovito.xor_count(mastrovito.constant_mul_matrix(field, i)))
              for i in range(field.order - 1)]
    if args.format == "json":
        return render_json({
            "m": field.m, "estimate": str(estimate),
            "counts": [{"power": p, "xor_count": c} for p, c in counts],
        })
    headers = ["power", "xor_count"]
    rows = [(p, str(c)) for p, c in counts]
    if args.format == "csv":
        return render_csv(headers, rows + [("estimate", str(estimate))])
    return render_table(headers, rows) + f"estimate = {estimate}\n"


def _complexity_output(args: argparse.Namespace) -> str:
    report = mastrovito.complexity_report(args.m, args.k)
    headers = ["design", "AND", "NAND", "XOR", "delay"]
    if args.format == "json":
        def rows(section):
            return [{"design": d, "and": a, "nand": n, "xor": x, "delay": t}
                    for d, a, n, x, t in section]
        return render_json({
            "m": report.m, "k": report.k,
            "literature": rows(report.literature),
            "measured": rows(report.measured),
            "notes": list(report.notes),
        })
    if args.format == "csv":
        return render_csv(headers, list(report.literature) + list(report.measured))
    title = (f"multiplier complexity over x^{report.m} + x^{report.k} + 1 "
             f"(m = {report.m}, k = {report.k})\n\n")
    body = render_table(headers, list(report.literature) + list(report.measured))
    notes = "".join(f"note: {n}\n" for n in report.notes)
    return title + body + "\n" + notes


def cmd_errata(args: argparse.Namespace) -> str:
    if args.format == "json":
        return render_json({"errata": [{
            "id": e.eid, "where": e.where, "published": e.published,
            "computed": e.computed, "note": e.note,
        } for e in ERRATA]})
    if args.format == "csv":
        return render_csv(["id", "where", "published", "computed", "note"],
                          [(e.eid, e.where, e.published, e.computed, e.note)
                           for e in ERRATA])
    blocks = []
    for e in ERRATA:
        blocks.append(f"{e.eid}: {e.where}\n"
                      f"  published: {e.published}\n"
                      f"  computed:  {e.computed}\n"
                      f"  note: {e.note}\n")
    return "\n".join(blocks)


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["table", "csv", "json"],
                     default="table", help="output format (default: table)")

    parser = argparse.ArgumentParser(
        prog="gf2m",
        description="GF(2^m) arithmetic tables, multiplier netlists, "
                    "and gate-count reports.")
    sub = parser.add_subparsers(dest="command", required=True)

    field_p = sub.add_parser("field", help="field-level tables")
    field_sub = field_p.add_subparsers(dest="subcommand", required=True)
    ft = field_sub.add_parser("table", parents=[fmt],
                              help="power/polynomial/vector table")
    ft.add_argument("--m", type=int, required=True, help="extension degree")
    ft.add_argument("--poly", help="defining polynomial (default: registry)")
    ft.set_defaults(handler=cmd_field_table)

    mp = sub.add_parser("minpolys", parents=[fmt],
                        help="minimal polynomials by conjugacy class")
    mp.add_argument("--m", type=int, required=True)
    mp.set_defaults(handler=cmd_minpolys)

    ba = sub.add_parser("bases", parents=[fmt],
                        help="standard/dual/normal coordinates")
    ba.add_argument("--m", type=int, required=True)
    ba.set_defaults(handler=cmd_bases)

    cm = sub.add_parser("constmul", parents=[fmt],
                        help="constant multiplier for alpha^power")
    cm.add_argument("--m", type=int, required=True)
    cm.add_argument("--power", type=int, required=True,
                    help="exponent i of the constant alpha^i")
    cm.add_argument("--emit", choices=["equations", "netlist", "count"],
                    default="equations")
    cm.set_defaults(handler=cmd_constmul)

    ma = sub.add_parser("mastrovito", parents=[fmt],
                        help="product matrix or general multiplier netlist")
    ma.add_argument("--m", type=int, required=True)
    ma.add_argument("--a", required=True,
                    help="fixed operand (binary, 0x hex, or x^ terms)")
    ma.add_argument("--emit", choices=["matrix", "netlist", "symbolic"],
                    default="matrix")
    ma.set_defaults(handler=cmd_mastrovito)

    lf = sub.add_parser("lfsr", help="shift-register computations")
    lf_sub = lf.add_subparsers(dest="subcommand", required=True)
    dv = lf_sub.add_parser("divide", parents=[fmt],
                           help="divide p by g on the divider register")
    dv.add_argument("--g", required=True, help="divisor polynomial")
    dv.add_argument("--p", required=True, help="dividend polynomial")
    dv.add_argument("--trace", choices=["table", "csv"],
                    help="print the per-clock register trace")
    dv.set_defaults(handler=cmd_lfsr_divide)

    co = sub.add_parser("code", help="block-code measurements")
    co_sub = co.add_subparsers(dest="subcommand", required=True)
    an = co_sub.add_parser("analyze", parents=[fmt],
                           help="distance/rate report for a word list")
    an.add_argument("--words", required=True,
                    help="file with one binary codeword per line")
    an.add_argument("--k", type=int, help="message length override")
    an.set_defaults(handler=cmd_code_analyze)

    rp = sub.add_parser("report", help="gate-count reports")
    rp_sub = rp.add_subparsers(dest="subcommand", required=True)
    rg = rp_sub.add_parser("gates", parents=[fmt],
                           help="XOR counts per constant, or --k for the "
                                "trinomial complexity table")
    rg.add_argument("--m", type=int, required=True)
    rg.add_argument("--k", type=int,
                    help="middle exponent of x^m + x^k + 1")
    rg.set_defaults(handler=cmd_report_gates)

    er = sub.add_parser("errata", parents=[fmt],
                        help="published-vs-computed discrepancy registry")
    er.set_defaults(handler=cmd_errata)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    if hasattr(sys.stdout, "reconfigure"):
        sys.stdout.reconfigure(encoding="utf-8")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        output = args.handler(args)
    except Gf2mError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001 - contract: invariant breach = 3
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    sys.stdout.write(output)
    return 0
