"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 solver underdetermined or inconsistent.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from detvar import acceptance
from detvar.counting import euler_via_count, gl_count, projective_det_count, singular_locus_count
from detvar.graded import free_rank
from detvar.les import SolverError
from detvar.poly import Convention, Polynomial, is_palindromic, is_unimodal
from detvar.spaces import psu_poincare
from detvar.variety import (
    compare_modes,
    corollary_components,
    corollary_poincare,
    solved_poincare,
    theorem_homology_table,
)

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_SOLVER = 0, 1, 2, 3


def make_record(n, mode, poly, diagnostics=(), discrepancies=()):
    return {
        "n": n,
        "mode": mode,
        "poincare": [{"degree": k, "coeff": str(c)} for k, c in poly.terms()],
        "diagnostics": list(diagnostics),
        "discrepancies": [
            {"degree": d.degree, "values": {m: str(v) for m, v in d.values.items()}} for d in discrepancies
        ],
    }


def dump_json(record) -> str:
    return json.dumps(record, indent=2, sort_keys=True, ensure_ascii=False)


def dump_csv(record) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["degree", "coefficient"])
    for term in record["poincare"]:
        w.writerow([term["degree"], term["coeff"]])
    return buf.getvalue().rstrip("\n")


def dump_table(record, var="t") -> str:
    poly = Polynomial({t["degree"]: int(t["coeff"]) for t in record["poincare"]})
    lines = [f"n = {record['n']}  mode = {record['mode']}", f"P({var}) = {poly.format(var)}", "", "degree  coeff"]
    lines += [f"{t['degree']:>6}  {t['coeff']:>5}" for t in record["poincare"]]
    if record["diagnostics"]:
        lines += ["", "diagnostics:"] + [f"  {d}" for d in record["diagnostics"]]
    if record["discrepancies"]:
        lines += ["", "discrepancies:"]
        for d in record["discrepancies"]:
            vals = ", ".join(f"{m}={v}" for m, v in d["values"].items())
            lines.append(f"  degree {d['degree']}: {vals}")
    return "\n".join(lines)


def emit(record, fmt, var="t"):
    if fmt == "json":
        print(dump_json(record))
    elif fmt == "csv":
        print(dump_csv(record))
    else:
        print(dump_table(record, var))


def _convention(args) -> Convention:
    return Convention.ALL if args.convention == "all" else Convention.NONZERO


def cmd_psu(args):
    p = psu_poincare(args.n)
    conv = _convention(args)
    diags = [
        f"palindromic: {str(is_palindromic(p)).lower()}",
        f"unimodal[{conv.value}]: {str(is_unimodal(p, conv)).lower()}",
        f"value at t=1: {sum(c for _, c in p.terms())}",
    ]
    emit(make_record(args.n, "psu", p, diags), args.format)


def cmd_betti(args):
    n = args.n
    if args.mode == "solved":
        emit(make_record(n, "solved", solved_poincare(n)), args.format)
    elif args.mode == "corollary":
        a, b, bt = corollary_components(n)
        diags = [f"A = {a}", f"B = {b}", f"B~ = {bt}"]
        emit(make_record(n, "corollary", corollary_poincare(n), diags), args.format)
    else:
        table = theorem_homology_table(n)
        poly = Polynomial({k: free_rank(d) for k, d in table.entries.items()})
        diags = [f"H_{k}(Y) = {d}" for k, d in table.entries.items()] + list(table.diagnostics)
        emit(make_record(n, "theorem", poly, diags), args.format)


def cmd_count(args):
    n = args.n
    diags = [
        f"|GL_n| = {gl_count(n).format('q')}",
        f"|singular matrices| = {singular_locus_count(n).format('q')}",
        f"euler characteristic (q=1) = {euler_via_count(n)}",
    ]
    emit(make_record(n, "count", projective_det_count(n), diags), args.format, var="q")


def cmd_compare(args):
    report = compare_modes(args.n)
    diags = [f"euler: solved {report.euler_solved}, count {report.euler_count}"]
    diags += [f"{name}: {str(ok).lower()}" for name, ok in report.verdicts.items()]
    record = make_record(args.n, "solved", solved_poincare(args.n), diags, report.discrepancies)
    emit(record, args.format)


def cmd_verify(args):
    results = acceptance.run_all(args.max_n)
    if args.format == "json":
        print(json.dumps(
            [{"criterion": c.number, "name": c.name, "passed": ok, "detail": d} for c, ok, d in results],
            indent=2,
        ))
    else:
        for c, ok, detail in results:
            print(f"[{'PASS' if ok else 'FAIL'}] {c.number:>2} {c.name}: {detail}")
    return EXIT_OK if all(ok for _, ok, _ in results) else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    def global_flags(p, default):
        # global flags are accepted before or after the subcommand
        p.add_argument("--format", choices=("table", "json", "csv"),
                       default="table" if default else argparse.SUPPRESS)
        p.add_argument("--convention", choices=("all", "nonzero"),
                       default="nonzero" if default else argparse.SUPPRESS,
                       help="unimodality convention (psu subcommand)")

    parser = argparse.ArgumentParser(prog="detvar",
                                     description="Betti numbers of the projective determinantal hypersurface")
    global_flags(parser, True)
    common = argparse.ArgumentParser(add_help=False)
    global_flags(common, False)
    sub = parser.add_subparsers(dest="command", required=True)

    def n_arg(p, flag="--n"):
        p.add_argument(flag, type=int, required=True)

    p = sub.add_parser("psu", parents=[common], help="Poincare polynomial of PSU_n with shape analysis")
    n_arg(p)
    p.set_defaults(func=cmd_psu)

    p = sub.add_parser("betti", parents=[common], help="Poincare polynomial of Y in one mode")
    n_arg(p)
    p.add_argument("--mode", choices=("solved", "corollary", "theorem"), default="solved")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("count", parents=[common], help="point-counting polynomials and Euler characteristic")
    n_arg(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("compare", parents=[common], help="degreewise comparison of all modes")
    n_arg(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("verify", parents=[common], help="run the acceptance checks")
    p.add_argument("--max-n", type=int, default=8)
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    bound = getattr(args, "n", None) if args.command != "verify" else args.max_n
    if bound is None or bound < 2:
        parser.print_usage(sys.stderr)
        print("detvar: error: n must be at least 2", file=sys.stderr)
        return EXIT_USAGE
    try:
        code = args.func(args)
    except SolverError as exc:
        print(f"detvar: solver error: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    return code or EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
