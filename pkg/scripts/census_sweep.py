"""
Run an oracle-verified census and print verdict tallies.

    python scripts/census_sweep.py --p-max 16 --q-max 16 --s-set=-4,4
"""
import argparse
import collections
import sys
import time

from twisted_torus.census import CensusConfig, run_census
from twisted_torus.classifier import NotHyperbolic


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--p-max", type=int, default=16)
    parser.add_argument("--q-max", type=int, default=16)
    parser.add_argument("--s-set", default="-4,4")
    args = parser.parse_args()
    config = CensusConfig(args.p_max, args.q_max,
                          tuple(int(x) for x in args.s_set.split(",")), verify=True)

    start = time.perf_counter()
    tally = collections.Counter()
    checked = failed = 0
    for row in run_census(config):
        v = row.verdict
        tally[v.obstruction.kind if isinstance(v, NotHyperbolic) else v.kind] += 1
        if row.checks is not None:
            checked += 1
            failed += not row.checks.ok
    elapsed = time.perf_counter() - start

    for kind, n in sorted(tally.items()):
        print(f"{kind:20s} {n:7d}")
    print(f"oracle-checked rows: {checked}, failures: {failed}, {elapsed:.1f}s")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
