"""
Command-line interface.

    twisted-torus classify P Q R S [--json]
    twisted-torus invariants P Q R S [--json]
    twisted-torus braid P Q R S [--format braid-word|gauss|pd]
    twisted-torus census [--p-max N] [--q-max N] [--s-set LIST] [--format csv|json] [--verify]

Exit status: 0 success, 1 oracle verification failure, 2 usage or
validation error.
"""
from __future__ import annotations

import argparse
import csv
import sys

from .braids import twisted_torus_braid
from .census import CSV_HEADER, CensusConfig, run_census
from .codes import FORMATS, export_code
from .errors import OutOfRange, Unsupported
from .params import TwistedTorusParams
from .report import classify_report, classify_text, dumps, invariants_report, invariants_text


def _s_set(text):
    try:
        values = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma list of integers: {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("empty s-set")
    if 0 in values:
        raise argparse.ArgumentTypeError("s must be nonzero in census sweeps")
    return values


def _bound(text):
    value = int(text)
    if value < 2:
        raise argparse.ArgumentTypeError(f"bound must be >= 2, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twisted-torus",
        description="Geometric classification of twisted torus links T(p, q; r, s).")
    sub = parser.add_subparsers(dest="command", required=True)

    def tuple_args(p):
        for name in "pqrs":
            p.add_argument(name, type=int)

    p = sub.add_parser("classify", help="classify one tuple")
    tuple_args(p)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("invariants", help="components, linking numbers, split, companions")
    tuple_args(p)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("braid", help="emit a braid or diagram code (r <= p only)")
    tuple_args(p)
    p.add_argument("--format", choices=FORMATS, default="braid-word")

    p = sub.add_parser("census", help="classify a grid of tuples with 2 <= q <= p")
    p.add_argument("--p-max", type=_bound, default=8)
    p.add_argument("--q-max", type=_bound, default=8)
    p.add_argument("--s-set", type=_s_set, default=(4,))
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--verify", action="store_true",
                   help="cross-check every applicable row with the braid oracle")
    return parser


def _params(args):
    return TwistedTorusParams(args.p, args.q, args.r, args.s)


def cmd_classify(args, out):
    params = _params(args)
    out.write((dumps(classify_report(params)) if args.json else classify_text(params)) + "\n")
    return 0


def cmd_invariants(args, out):
    params = _params(args)
    out.write((dumps(invariants_report(params)) if args.json else invariants_text(params)) + "\n")
    return 0


def cmd_braid(args, out):
    word = twisted_torus_braid(_params(args))
    out.write(export_code(word, args.format) + "\n")
    return 0


def cmd_census(args, out):
    config = CensusConfig(args.p_max, args.q_max, args.s_set, args.verify)
    failures = 0
    if args.format == "csv":
        writer = csv.DictWriter(out, fieldnames=CSV_HEADER, lineterminator="\n")
        writer.writeheader()
    for row in run_census(config):
        if row.checks is not None and not row.checks.ok:
            failures += 1
        if args.format == "csv":
            writer.writerow(row.flat())
        else:
            out.write(dumps(row.to_dict()) + "\n")
    if failures:
        print(f"oracle verification failed on {failures} row(s)", file=sys.stderr)
        return 1
    return 0


COMMANDS = {
    "classify": cmd_classify,
    "invariants": cmd_invariants,
    "braid": cmd_braid,
    "census": cmd_census,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except (OutOfRange, Unsupported) as e:
        print(f"twisted-torus {args.command}: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
