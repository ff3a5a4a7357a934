"""Command-line front end.

    invmds check MATRIX_FILE [--expect mds,involutory] [--json PATH]
    invmds search --m 3 --order 3 --max-distinct 2 --mode involutory ...
    invmds claims [--fields m=2,m=3,m=8] [--json PATH]

Exit codes: 0 success/pass, 1 verification mismatch or inconclusive,
2 usage or parse error.
"""

import argparse
import json
import sys

from .gf2m import FieldError, make_field, parse_poly
from .matgf import distinct_values, is_involutory, is_mds
from .matrixfile import MatrixFileError, parse_matrix_file
from .report import dumps, markdown_summary, report_document
from .search import (DEFAULT_BUDGET_NODES, DEFAULT_BUDGET_SECONDS,
                     DEFAULT_MAX_WITNESSES, ENGINES, INCONCLUSIVE, MODES, SHAPES,
                     Budget, SearchTask, search, verify_paper_claims)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

EXPECTATIONS = ("mds", "involutory")


class UsageError(Exception):
    pass


def _write(path, text):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def check_matrix(A):
    return {
        "is_mds": is_mds(A),
        "is_involutory": is_involutory(A),
        "distinct_values": distinct_values(A),
        "order": A.n,
        "field": A.field.to_dict(),
    }


def cmd_check(args, out=sys.stdout, err=sys.stderr):
    expect = []
    if args.expect:
        expect = [e.strip() for e in args.expect.split(",") if e.strip()]
        unknown = set(expect) - set(EXPECTATIONS)
        if unknown:
            raise UsageError(f"unknown expectation(s): {', '.join(sorted(unknown))}")
    try:
        with open(args.path, "rb") as fh:
            A = parse_matrix_file(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {args.path}: {exc.strerror}") from None
    except (MatrixFileError, UnicodeDecodeError) as exc:
        print(f"{args.path}: {exc}", file=err)
        return EXIT_USAGE
    result = check_matrix(A)
    text = json.dumps(result, indent=2, sort_keys=True) + "\n"
    out.write(text)
    if args.json:
        _write(args.json, text)
    unmet = [e for e in expect if not result[f"is_{e}"]]
    if unmet:
        print(f"expectation not met: {', '.join(unmet)}", file=err)
        return EXIT_MISMATCH
    return EXIT_OK


def _field_from_args(m, poly):
    try:
        return make_field(m, parse_poly(poly) if poly else None)
    except (FieldError, ValueError) as exc:
        raise UsageError(str(exc)) from None


def cmd_search(args, out=sys.stdout, err=sys.stderr):
    field = _field_from_args(args.m, args.poly)
    try:
        task = SearchTask(
            field=field, n=args.order, k=args.max_distinct, mode=args.mode,
            engine=args.engine, shape=args.shape, require_exact_k=args.exact_k,
            count=args.count, symmetry=not args.no_symmetry,
            claim_filters=args.claim_filters,
            max_witnesses=args.max_witnesses,
            budget_nodes=args.budget_nodes, budget_seconds=args.budget_seconds)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = search(task)
    doc = report_document([report], [field], "search")
    if report.outcome == INCONCLUSIVE:
        doc["verdict"] = INCONCLUSIVE
    line = (f"{field} n={task.n} k<={task.k} {task.mode} {task.shape} "
            f"[{task.engine}]: {report.outcome}")
    if report.count is not None:
        line += f", count={report.count}"
    line += f", {len(report.witnesses)} witness(es), {report.nodes_explored} nodes"
    print(line, file=out)
    for A in report.witnesses[:1]:
        print(A, file=out)
    if args.json:
        _write(args.json, dumps(doc))
    return EXIT_MISMATCH if report.outcome == INCONCLUSIVE else EXIT_OK


def parse_fields(specs):
    """Parse items like ``m=3`` or ``m=8:0x11d`` (comma- or space-separated)."""
    fields = []
    for item in ",".join(specs).split(","):
        item = item.strip()
        if not item:
            continue
        head, _, poly = item.partition(":")
        if not head.startswith("m=") or not head[2:].isdigit():
            raise UsageError(f"bad field spec {item!r} (expected m=<int>[:<poly>])")
        fields.append(_field_from_args(int(head[2:]), poly or None))
    if not fields:
        raise UsageError("--fields given but empty")
    return fields


def cmd_claims(args, out=sys.stdout, err=sys.stderr):
    fields = parse_fields(args.fields) if args.fields else None
    reports = verify_paper_claims(
        fields, Budget(args.budget_nodes, args.budget_seconds), engine=args.engine)
    used = fields if fields is not None else _default_fields()
    doc = report_document(reports, used, "claims")
    out.write(markdown_summary(doc))
    if args.json:
        _write(args.json, dumps(doc))
    if doc["verdict"] != "pass":
        return EXIT_MISMATCH
    if any(r.outcome == INCONCLUSIVE for r in reports) and not args.allow_inconclusive:
        return EXIT_MISMATCH
    return EXIT_OK


def _default_fields():
    from .search import default_fields
    return default_fields()


def _positive_int(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _budget_flags(p):
    p.add_argument("--budget-nodes", type=_positive_int, default=DEFAULT_BUDGET_NODES)
    p.add_argument("--budget-seconds", type=float, default=DEFAULT_BUDGET_SECONDS)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="invmds",
        description="Check and search for (involutory) MDS matrices over GF(2^m).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="analyse a matrix file")
    p.add_argument("path")
    p.add_argument("--expect", help="comma list from: mds, involutory")
    p.add_argument("--json", help="also write the result to this path")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("search", help="run one exhaustive search")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--poly", help="reduction polynomial as 0x.. or 0b.. (default per m)")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--max-distinct", type=int, required=True)
    p.add_argument("--mode", choices=MODES, default="involutory")
    p.add_argument("--engine", choices=ENGINES, default="pattern")
    p.add_argument("--shape", choices=SHAPES, default="full")
    p.add_argument("--exact-k", action="store_true",
                   help="require exactly max-distinct values")
    p.add_argument("--count", action="store_true",
                   help="count every solution (disables symmetry reduction)")
    p.add_argument("--no-symmetry", action="store_true")
    p.add_argument("--claim-filters", action="store_true",
                   help="prune with the order-4 structural claims (involutory only)")
    p.add_argument("--max-witnesses", type=int, default=DEFAULT_MAX_WITNESSES)
    _budget_flags(p)
    p.add_argument("--json")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("claims", help="run the claim suite")
    p.add_argument("--fields", nargs="+",
                   help="fields as m=<int>[:<poly>], e.g. m=2,m=3,m=8")
    p.add_argument("--engine", choices=ENGINES, default="pattern")
    _budget_flags(p)
    p.add_argument("--allow-inconclusive", action="store_true")
    p.add_argument("--json")
    p.set_defaults(func=cmd_claims)
    return parser


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args, out=out, err=err)
    except UsageError as exc:
        print(f"invmds: error: {exc}", file=err)
        return EXIT_USAGE


def main_exit():
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
