#!/usr/bin/env python3
"""Survey good/bad prime verdicts across root-system types and levels.

For each (type, odd level) pair, classifies every prime up to --pmax and
counts the alcove weights whose dimension norm each divisor prime divides.
Cells: G = good, B = bad (certified witness), o = outside the classifier's
hypotheses (divisor prime below the Coxeter number), . = prime above pmax.
"""

import argparse
import sys

from fuscat.arith import primes_upto
from fuscat.errors import PreconditionError
from fuscat.rootsys import build_root_system
from fuscat.verlinde import Verdict, classify_prime, simple_objects


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--types", default="A1,A2,A3,D4")
    ap.add_argument("--lmax", type=int, default=21)
    ap.add_argument("--pmax", type=int, default=30)
    args = ap.parse_args()

    primes = primes_upto(args.pmax)
    for label in args.types.split(","):
        rs = build_root_system(label.strip())
        h = rs.coxeter_number
        print(f"\n{rs.label} (Coxeter number {h}); columns: p = {primes}")
        start = h + 1 if (h + 1) % 2 else h + 2
        for l in range(start, args.lmax + 1, 2):
            cells = []
            for p in primes:
                try:
                    v = classify_prime(rs, l, p)
                except PreconditionError:
                    cells.append("?")
                    continue
                cells.append({Verdict.GOOD: "G", Verdict.BAD: "B",
                              Verdict.OUTSIDE_THEOREM: "o"}[v.verdict])
            simples = simple_objects(rs, l)
            nonunit = sum(1 for s in simples if abs(s.qdim_norm) != 1)
            print(f"  l={l:<3d} {' '.join(cells)}   "
                  f"({len(simples)} simples, {nonunit} with non-unit norm)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
