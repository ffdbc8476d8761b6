"""Command-line front end.

    untwist invariants --knot 6_1 [--format json]
    untwist obstruct   --knot 3_1 --k 2
    untwist scan       --seifert '[[-1,1],[0,-1]]' --k-min -3 --k-max 3
    untwist batch      --k-min 1 --k-max 4 --format json

Exit codes: 0 success, 1 validation or computation error, 2 usage error.
The catalog is ``--catalog``, else ``$KNOT_CATALOG``, else the bundled table.
"""

import argparse
import json
import sys

from .catalog import load_catalog, lookup
from .errors import UntwistError
from .invariants import knot_invariants, validate_seifert
from .obstruction import evaluate


def _nonzero_int(text):
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer: {text!r}") from None
    if k == 0:
        raise argparse.ArgumentTypeError("k must be nonzero")
    return k


def build_parser():
    parser = argparse.ArgumentParser(
        prog="untwist",
        description="Knot invariants and obstructions to algebraic k-simplicity from Seifert matrices.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--catalog", help="JSON-lines knot catalog (overrides $KNOT_CATALOG)")
    common.add_argument("--format", choices=("text", "json"), default="text")

    selector = argparse.ArgumentParser(add_help=False)
    group = selector.add_mutually_exclusive_group(required=True)
    group.add_argument("--knot", help="knot name in the catalog")
    group.add_argument("--seifert", help="inline Seifert matrix as a JSON array of arrays")

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("invariants", parents=[common, selector], help="Alexander polynomial and double-cover homology")
    p = sub.add_parser("obstruct", parents=[common, selector], help="evaluate the obstructions for one k")
    p.add_argument("--k", type=_nonzero_int, required=True)
    p = sub.add_parser("scan", parents=[common, selector], help="evaluate every nonzero k in a range")
    p.add_argument("--k-min", type=int, required=True)
    p.add_argument("--k-max", type=int, required=True)
    p = sub.add_parser("batch", parents=[common], help="scan every knot in the catalog")
    p.add_argument("--k", type=_nonzero_int)
    p.add_argument("--k-min", type=int)
    p.add_argument("--k-max", type=int)
    return parser


def _k_values(args, parser):
    if getattr(args, "k", None) is not None:
        if args.k_min is not None or args.k_max is not None:
            parser.error("use either --k or --k-min/--k-max")
        return [args.k]
    if args.k_min is None or args.k_max is None:
        parser.error("need --k or both --k-min and --k-max")
    if args.k_min > args.k_max:
        parser.error("--k-min must not exceed --k-max")
    return [k for k in range(args.k_min, args.k_max + 1) if k != 0]


def _select(args):
    if args.seifert is not None:
        try:
            matrix = json.loads(args.seifert)
        except json.JSONDecodeError as exc:
            raise UntwistError(f"malformed inline matrix: {exc.msg}") from None
        if not isinstance(matrix, list) or not all(isinstance(r, list) for r in matrix):
            raise UntwistError("inline matrix must be a JSON array of arrays")
        return "inline", validate_seifert(matrix)
    records = load_catalog(args.catalog)
    try:
        return args.knot, lookup(records, args.knot).seifert
    except KeyError:
        raise UntwistError(f"unknown knot {args.knot!r}") from None


def _group(factors):
    return " + ".join(f"Z/{n}" for n in factors) if factors else "0"


def format_invariants(name, inv):
    return "\n".join(
        [
            f"knot {name}",
            f"  Alexander polynomial: {inv.alexander}",
            f"  Delta(-1): {inv.signed_alexander_at_minus_one}",
            f"  H_1(double branched cover): {_group(inv.dbc_invariant_factors)}",
        ]
    )


def format_report(report):
    lines = [f"knot {report.knot}, k = {report.k}"]
    a = report.alexander
    if a.passed:
        lines.append(f"  alexander: pass, alpha = {a.alpha}")
    else:
        lines.append(
            f"  alexander: fail, coefficient {a.failing_coefficient} of t^{a.failing_exponent}"
            f" in Delta - 1 is not divisible by {report.k}"
        )
    c = report.cyclicity
    lines.append(f"  cyclicity: {'pass' if c.passed else 'fail'}, H_1 = {_group(c.invariant_factors)}")
    link = report.linking
    if link.status == "skipped":
        lines.append("  linking:   skipped")
    else:
        lines.append(
            f"  linking:   {link.status}, d = {link.d}, 2l(K) = {link.knot_form.a}/{link.knot_form.n},"
            f" candidate = {link.candidate_form.a}/{link.candidate_form.n}"
        )
    if report.obstructed:
        lines.append(f"  verdict: obstructed ({', '.join(report.failed_tests)})")
    else:
        lines.append("  verdict: not obstructed (necessary conditions hold)")
        lines.append(f"  algebraic unknotting number <= {report.ua_bound}")
        lines.extend(f"  {note}" for note in report.notes)
    return "\n".join(lines)


def _emit(report, fmt, out):
    if fmt == "json":
        out.write(json.dumps(report.to_dict()) + "\n")
    else:
        out.write(format_report(report) + "\n")
    out.flush()


def run(args, parser, out=None):
    out = out or sys.stdout
    if args.command == "invariants":
        name, V = _select(args)
        inv = knot_invariants(V)
        if args.format == "json":
            out.write(json.dumps(inv.to_dict()) + "\n")
        else:
            out.write(format_invariants(name, inv) + "\n")
    elif args.command == "obstruct":
        name, V = _select(args)
        _emit(evaluate(V, args.k, name), args.format, out)
    elif args.command == "scan":
        if args.k_min > args.k_max:
            parser.error("--k-min must not exceed --k-max")
        name, V = _select(args)
        for k in range(args.k_min, args.k_max + 1):
            if k:
                _emit(evaluate(V, k, name), args.format, out)
    elif args.command == "batch":
        ks = _k_values(args, parser)
        for record in load_catalog(args.catalog):
            for k in ks:
                _emit(evaluate(record.seifert, k, record.name), args.format, out)
    return 0


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run(args, parser)
    except (UntwistError, OSError) as exc:
        print(f"untwist: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
