"""Command-line front end.

Commands: count, triangular, reduce, verify, alpha2, tables.  Data goes to
stdout (and is byte-stable across runs and worker counts); progress and
summaries go to stderr.  Exit codes: 0 success / all checks passed,
1 at least one failed check, 2 usage or validation error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .counting import count, count_parity
from .forms import ParityClass, TernaryQuadForm
from .identities import table_triples
from .localdensity import alpha2_of
from .reductions import reduce_triple
from .scans import SCAN_IDS, run_scan
from .triangular import t_direct


def _parse_parity(text: str) -> ParityClass:
    try:
        return ParityClass(tuple(int(t) for t in text.split(",")))
    except ValueError as exc:
        raise ValueError(f"bad parity {text!r}: {exc}") from exc


def _cmd_count(args) -> int:
    form = TernaryQuadForm.from_literal(args.form)
    if args.parity is not None:
        value = count_parity(form, args.n, _parse_parity(args.parity))
    else:
        value = count(form, args.n)
    print(value)
    return 0


def _cmd_triangular(args) -> int:
    print(t_direct((args.a, args.b, args.c), args.n))
    return 0


def _cmd_reduce(args) -> int:
    print(reduce_triple((args.a, args.b, args.c)).describe())
    return 0


def _cmd_alpha2(args) -> int:
    print(alpha2_of(args.n))
    return 0


def _cmd_tables(args) -> int:
    triples = table_triples(args.which)
    if args.format == "json":
        print(json.dumps([list(t) for t in triples]))
    else:
        for t in triples:
            print(",".join(str(v) for v in t))
    return 0


def _cmd_verify(args) -> int:
    if args.nmax < 1:
        raise ValueError("--nmax must be >= 1")
    if args.workers < 1:
        raise ValueError("--workers must be >= 1")
    report = run_scan(args.identity, args.nmax, workers=args.workers,
                      force=args.force)
    sys.stdout.write(report.render(args.format))
    summary = report.summary_line(f"verify {args.identity}")
    failures = report.failures()
    if failures:
        summary += f"; first failure: {failures[0].to_text_line()}"
    print(summary, file=sys.stderr)
    return 0 if report.all_passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="triforms",
        description="Exact representation counts for ternary quadratic forms "
                    "and triangular-number sums, with identity verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="representation count r(f, n)")
    p.add_argument("--form", required=True,
                   help='form literal "q11,q22,q33;q23,q13,q12"')
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--parity", help='restrict coordinates mod 2, e.g. "1,1,1"')
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("triangular", help="t(a,b,c;n)")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("c", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_triangular)

    p = sub.add_parser("reduce", help="rewrite t(a,b,c;n) as form counts")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("c", type=int)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("verify", help="scan an identity over a range")
    p.add_argument("identity", choices=SCAN_IDS)
    p.add_argument("--nmax", type=int, required=True,
                   help="upper bound for n (or m, for the m-indexed scans)")
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--force", action="store_true",
                   help="also check n outside the identity's stated domain")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("alpha2", help="2-adic density of <1,1,6> at even n")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_alpha2)

    p = sub.add_parser("tables", help="print the eligible-triple tables")
    p.add_argument("which", type=int, choices=(1, 2))
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=_cmd_tables)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
