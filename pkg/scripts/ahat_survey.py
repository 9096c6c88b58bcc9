#!/usr/bin/env python3
"""Survey quotient-algebra dimensions across the catalog.

For every catalog group up to --max-order, print the rb quotient dimension
next to |Out(H)| (they must agree), and the rq quotient next to the primitive
character count for cyclic groups.
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from bisetkit.catalog import groups_up_to
from bisetkit.green import RQBackend, ahat_dim, check_out_iso, primitive_characters


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-order", type=int, default=6)
    parser.add_argument("--rq", action="store_true",
                        help="also compute the rq quotient (slower)")
    args = parser.parse_args()

    print(f"{'group':>10} {'ahat_rb':>8} {'|Out|':>6} {'match':>6}", end="")
    if args.rq:
        print(f" {'ahat_rq':>8} {'#prim':>6}")
    else:
        print()
    for g in groups_up_to(args.max_order):
        rep = check_out_iso(g)
        row = f"{g.label:>10} {rep['quotient_dim']:>8} {rep['out_order']:>6} " \
              f"{str(rep['match']):>6}"
        if args.rq:
            dim = ahat_dim(RQBackend(), g)
            prim = (len(primitive_characters(g.order))
                    if g.label.startswith("C") and g.is_abelian else "-")
            row += f" {dim:>8} {str(prim):>6}"
        print(row)
    return 0


if __name__ == "__main__":
    sys.exit(main())
