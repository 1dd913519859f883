"""Command-line front end.

Exit status: 0 on success, 1 for domain errors (no such knot, det != 1, ...),
2 for usage errors (bad arguments, unparsable braid or matrix text).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import atlas as atlas_mod
from .baker import classify, table1
from .braid3 import format_braid, monodromy, parse
from .errors import GofError, ParseError
from .lens import normalize
from .mat2 import conjugate_gl2, conjugate_sl2, parse_matrix
from .verdict import (
    AllIntegral,
    all_integral_lo,
    monodromy_class,
    surgery_verdict,
    verdicts,
)

ALL_LO_TEXT = {
    AllIntegral.ALL_LO: "every integral surgery is left-orderable",
    AllIntegral.NOT_ALL_LO: "some positive integral surgery is not left-orderable",
    AllIntegral.UNKNOWN: "not decided (non-hyperbolic monodromy)",
}


class UsageError(Exception):
    pass


def parse_slopes(text):
    """``a..b`` (inclusive) -> range. ``a..b`` with b < a is an empty window."""
    try:
        lo, hi = text.split("..")
        return range(int(lo), int(hi) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"slope window must look like a..b, got {text!r}") from None


def _emit(obj):
    print(json.dumps(obj, separators=(",", ":"), ensure_ascii=False))


def _knot_line(knot):
    return f"{knot.describe():<14} {format_braid(knot.braid):<28} {knot.matrix.to_text():<22} trace={knot.trace}"


def cmd_monodromy(args):
    w = parse(args.braid)
    M = monodromy(w)
    if args.json:
        _emit({"braid": format_braid(w), "matrix": M.rows(), "trace": M.trace})
    else:
        print(f"{M.to_text()} trace={M.trace}")


def cmd_classify(args):
    space = normalize(args.alpha, args.beta)
    knots = classify(space)
    if args.json:
        _emit({"space": space.to_dict(), "knots": [k.to_dict() for k in knots]})
        return
    if not knots:
        print(f"{space}: no GOF-knots")
    for k in knots:
        print(_knot_line(k))


def _find_knot(space, label):
    knots = classify(space)
    for k in knots:
        if k.label == label:
            return k
    have = ", ".join(k.label for k in knots) or "none"
    raise GofError(f"{space} has no GOF-knot labelled {label} (has: {have})")


def cmd_verdict(args):
    space = normalize(args.alpha, args.beta)
    knot = _find_knot(space, args.knot.upper())
    if args.slope is not None:
        v = surgery_verdict(knot, args.slope)
        if args.json:
            _emit(v.to_dict())
        else:
            print(v.describe())
        return
    summary = all_integral_lo(knot)
    cls = monodromy_class(knot.matrix)
    vs = verdicts(knot, args.slopes)
    if args.json:
        _emit({
            "knot": knot.to_dict(),
            "class": cls.value,
            "all_integral_lo": summary.value,
            "verdicts": [v.to_dict() for v in vs],
        })
        return
    print(f"{knot.describe()} in {space}: trace {knot.trace}, {cls.value}")
    print(f"all integral surgeries: {summary.value} ({ALL_LO_TEXT[summary]})")
    for v in vs:
        print(f"  n={v.slope:<4} {v.describe()}")


def cmd_conjugate(args):
    A = parse_matrix(args.first)
    B = parse_matrix(args.second)
    decide = conjugate_sl2 if args.group == "sl2" else conjugate_gl2
    result = decide(A, B)
    if args.json:
        _emit({"first": A.rows(), "second": B.rows(), "group": args.group, "conjugate": result})
    else:
        group = "SL2(Z)" if args.group == "sl2" else "GL2(Z)"
        print(f"{'conjugate' if result else 'not conjugate'} in {group}")


def cmd_table1(args):
    rows = table1()
    if args.json:
        for row in rows:
            _emit(row.to_dict())
        return
    print(f"{'label':<6} {'3-braid':<28} {'monodromy matrix':<40} trace")
    for row in rows:
        print(f"{row.label:<6} {row.braid:<28} {row.matrix:<40} {row.trace}")


def cmd_atlas(args):
    records = atlas_mod.enumerate_atlas(args.max_alpha, args.slopes, workers=args.workers)
    if args.format == "csv":
        atlas_mod.export_csv(records, args.out)
    else:
        atlas_mod.export_json(records, args.out)
    if args.out != "-":
        st = atlas_mod.stats(records)
        if args.json:
            _emit({"out": args.out, **st.to_dict()})
        else:
            counts = " ".join(f"{k}:{v}" for k, v in sorted(st.counts.items()))
            print(f"wrote {len(records)} spaces to {args.out}; knot counts {counts}; all-LO knots {st.lo_knot_count}")


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")

    parser = argparse.ArgumentParser(
        prog="gofknots",
        description="Genus one fibered knots in lens spaces and left-orderable integral surgeries.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("monodromy", parents=[common], help="monodromy matrix of a 3-braid word")
    p.add_argument("braid", help='braid word such as "s1^4 s2^-1"')
    p.set_defaults(func=cmd_monodromy)

    p = sub.add_parser("classify", parents=[common], help="GOF-knots of the lens space L(alpha,beta)")
    p.add_argument("alpha", type=int)
    p.add_argument("beta", type=int)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verdict", parents=[common], help="left-orderability of integral surgeries on a knot")
    p.add_argument("alpha", type=int)
    p.add_argument("beta", type=int)
    p.add_argument("--knot", required=True, help="knot label: A1 A2 A3 B1 B2 C D1 D2")
    which = p.add_mutually_exclusive_group()
    which.add_argument("--slope", type=int, help="a single integral slope n")
    which.add_argument("--all", action="store_true", help="summary plus the slope window (default)")
    p.add_argument("--slopes", type=parse_slopes, default=atlas_mod.DEFAULT_SLOPES,
                   help="slope window a..b for --all (default -5..5; write --slopes=-5..5)")
    p.set_defaults(func=cmd_verdict)

    p = sub.add_parser("conjugate", parents=[common], help="decide conjugacy of two det-1 matrices")
    p.add_argument("first", help="matrix [[a,b],[c,d]]")
    p.add_argument("second", help="matrix [[a,b],[c,d]]")
    p.add_argument("--group", choices=("sl2", "gl2"), default="gl2")
    p.set_defaults(func=cmd_conjugate)

    p = sub.add_parser("table1", parents=[common], help="monodromy matrices and traces of the eight knot families")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("atlas", parents=[common], help="sweep lens spaces and export the knot/verdict atlas")
    p.add_argument("--max-alpha", type=int, required=True)
    p.add_argument("--slopes", type=parse_slopes, default=atlas_mod.DEFAULT_SLOPES,
                   help="slope window a..b (default -5..5; write --slopes=-5..5)")
    p.add_argument("--out", required=True, help="output path, or - for standard output")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--workers", type=int, default=1, help="worker processes")
    p.set_defaults(func=cmd_atlas)
    return parser


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        args.func(args)
    except ParseError as exc:
        print(f"gofknots: error: {exc}", file=sys.stderr)
        return 2
    except (GofError, OSError, OverflowError) as exc:
        print(f"gofknots: error: {exc}", file=sys.stderr)
        return 1
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
