"""Command-line front end.

Verbs: ``table`` (triangle rows), ``poly`` (polynomial family
coefficients), ``series`` (EGF coefficients), ``verify`` (identity
harness), ``oracle-compare`` (cross-check the five routes to one triangle
entry).  All rationals are rendered "p/q" (integers as "p"); nothing is
ever printed in floating point.

Exit codes: 0 success / all checks pass, 1 a verification found a
counterexample or a comparison disagrees, 2 usage error (including
enumeration requests beyond the configured label cap).
"""

import argparse
import json
import sys
from fractions import Fraction

from . import enumeration, identities, riordan, triangles
from .errors import InstanceTooLarge, WhitneyError
from .grammar import whitney_row_from_grammar
from .qformat import parse_rat, rat_str
from .series import Egf, expm1_scaled

TABLE_KINDS = triangles.TRIANGLE_KINDS
POLY_KINDS = triangles.FAMILY_KINDS
SERIES_KINDS = (
    "bernoulli-numbers",
    "euler-zero-values",
    "cauchy1",
    "bell",
    "whitney2-column",
    "whitney1-column",
    "dowling-egf",
)


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="whitney",
        description="exact generalized Stirling-Whitney-Dowling computations",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("table", help="print triangle rows 0..n")
    p.add_argument("kind", choices=TABLE_KINDS)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--r", type=parse_rat, default=Fraction(0))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json", "pretty"), default="pretty")

    p = sub.add_parser("poly", help="print family members of degree 0..n")
    p.add_argument("kind", choices=POLY_KINDS)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--r", type=parse_rat, default=Fraction(0))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json", "pretty"), default="pretty")

    p = sub.add_parser("series", help="print EGF coefficients to a given order")
    p.add_argument("kind", choices=SERIES_KINDS)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--r", type=parse_rat, default=Fraction(0))
    p.add_argument("--k", type=int, default=0, help="column index for column series")
    p.add_argument("--u", type=parse_rat, default=Fraction(1), help="evaluation point")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json", "pretty"), default="json")

    p = sub.add_parser("verify", help="run identity checks")
    p.add_argument("name", help="registered identity name, or 'all'")
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--m", type=int, action="append", default=None)
    p.add_argument("--r", type=int, action="append", default=None)
    p.add_argument("--format", choices=("json", "pretty"), default="json")

    p = sub.add_parser(
        "oracle-compare",
        help="compare recurrence, grammar, series, and both enumeration counts",
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    return parser


def _emit_rows(rows, fmt, meta, out):
    if fmt == "csv":
        for row in rows:
            out.write(",".join(rat_str(v) for v in row) + "\n")
    elif fmt == "json":
        payload = dict(meta)
        payload["rows"] = [[rat_str(v) for v in row] for row in rows]
        out.write(json.dumps(payload) + "\n")
    else:
        width = max((len(rat_str(v)) for row in rows for v in row), default=1)
        for row in rows:
            out.write(" ".join(rat_str(v).rjust(width) for v in row) + "\n")


def _cmd_table(args, out):
    if args.n < 0:
        raise WhitneyError("--n must be nonnegative")
    tri = triangles.build_triangle(args.kind, args.m, args.r, args.n)
    meta = {"kind": tri.kind, "m": tri.m, "r": None if tri.r is None else rat_str(tri.r)}
    _emit_rows(tri.rows, args.format, meta, out)
    return 0


def _cmd_poly(args, out):
    if args.n < 0:
        raise WhitneyError("--n must be nonnegative")
    polys = [
        triangles.family(args.kind, j, m=args.m, r=args.r) for j in range(args.n + 1)
    ]
    rows = [[p.coeff(i) for i in range(j + 1)] for j, p in enumerate(polys)]
    meta = {"kind": args.kind, "m": args.m, "r": rat_str(args.r)}
    _emit_rows(rows, args.format, meta, out)
    return 0


def _series_for(args):
    if args.order < 1:
        raise WhitneyError("--order must be at least 1")
    if args.kind in ("bernoulli-numbers", "euler-zero-values", "cauchy1", "bell"):
        return Egf(triangles.classical_seq(args.kind, args.order))
    if args.kind == "dowling-egf":
        rt = Egf([0, args.r] + [0] * (args.order - 1))
        return (rt + args.u * expm1_scaled(args.m, args.order)).exp()
    if args.kind == "whitney2-column":
        arr = riordan.whitney2_array(args.m, args.r, args.order)
    else:  # whitney1-column
        arr = riordan.whitney1_array(args.m, args.r, args.order)
    if args.k > args.order:
        raise WhitneyError("--k must not exceed --order")
    return Egf([arr.entry(n, args.k) for n in range(args.order + 1)])


def _cmd_series(args, out):
    series = _series_for(args)
    if args.format == "json":
        out.write(series.to_json() + "\n")
    elif args.format == "csv":
        out.write(",".join(rat_str(c) for c in series.a) + "\n")
    else:
        for n, c in enumerate(series.a):
            out.write("%d: %s\n" % (n, rat_str(c)))
    return 0


def _cmd_verify(args, out):
    overrides = {}
    if args.max_n is not None:
        overrides["max_n"] = args.max_n
    if args.m is not None:
        overrides["m"] = tuple(args.m)
    if args.r is not None:
        overrides["r"] = tuple(args.r)
    if args.name == "all":
        reports = identities.run_all(overrides or None)
    else:
        check = identities.REGISTRY.get(args.name)
        if check is None:
            raise WhitneyError(
                "unknown identity %r; known: %s"
                % (args.name, ", ".join(identities.registry_names()))
            )
        applicable = {k: v for k, v in overrides.items() if k in check.grid}
        reports = [identities.run_check(args.name, applicable or None)]
    if args.format == "json":
        out.write(json.dumps([rep.to_dict() for rep in reports]) + "\n")
    else:
        for rep in reports:
            out.write(
                "%-24s %-4s grid=%-5d %5dms%s\n"
                % (
                    rep.name,
                    rep.status.upper(),
                    rep.grid_size,
                    rep.elapsed_ms,
                    ("  " + "; ".join(rep.notes)) if rep.notes else "",
                )
            )
            if rep.counterexample is not None:
                out.write("  counterexample: %s\n" % json.dumps(rep.counterexample))
    return 0 if all(rep.status == "pass" for rep in reports) else 1


def _cmd_oracle_compare(args, out):
    n, k, m, r = args.n, args.k, args.m, args.r
    if m < 1 or n < 0 or k < 0 or r < 0:
        raise WhitneyError("need m >= 1 and nonnegative n, k, r")
    values = {
        "recurrence": triangles.whitney2_row(m, r, n)[k] if k <= n else 0,
        "grammar": whitney_row_from_grammar(m, r, n)[k] if k <= n else 0,
        "egf": triangles.whitney2_row_egf(m, r, n)[k] if k <= n else 0,
        "pairs": enumeration.count_whitney_pairs(n, k, m, r),
        "mr": enumeration.count_augmented_partitions(n, k, m, r),
    }
    agree = len({Fraction(v) for v in values.values()}) == 1
    out.write(
        "%s %s\n"
        % (
            " ".join("%s=%s" % (name, rat_str(v)) for name, v in values.items()),
            "AGREE" if agree else "DISAGREE",
        )
    )
    return 0 if agree else 1


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 0
    handlers = {
        "table": _cmd_table,
        "poly": _cmd_poly,
        "series": _cmd_series,
        "verify": _cmd_verify,
        "oracle-compare": _cmd_oracle_compare,
    }
    try:
        return handlers[args.verb](args, sys.stdout)
    except InstanceTooLarge as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except WhitneyError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
