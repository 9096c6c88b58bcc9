#!/usr/bin/env python3
"""Tabulate primitive-character seeds per cyclic order, with the unit-group
structure and the character values that make each seed primitive."""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from bisetkit.green import seeds_kRQ, units_mod


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-m", type=int, default=12)
    parser.add_argument("--verify-ideal-up-to", type=int, default=0,
                        help="cross-check counts against the rq ideal span "
                             "for m up to this bound (slow beyond 8)")
    args = parser.parse_args()

    seeds = seeds_kRQ(args.max_m, verify_ideal_up_to=args.verify_ideal_up_to)
    by_m: dict[int, list] = {}
    for s in seeds:
        by_m.setdefault(s.m, []).append(s)
    print(f"{'m':>3} {'phi(m)':>7} {'seeds':>6}  characters (unit -> exponent)")
    for m in range(1, args.max_m + 1):
        row = by_m.get(m, [])
        print(f"{m:>3} {len(units_mod(m)):>7} {len(row):>6}", end="")
        for s in row:
            vals = ",".join(f"{u}:{k}" for u, k in s.character.values)
            print(f"  [{vals}]", end="")
        print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
