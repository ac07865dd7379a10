"""Exhaustively verify every Nash-Williams sequence over a range of n.

    python3 scripts/sweep_nash_williams.py --max-n 9 --jobs 4
"""

import argparse
import csv
import sys
import time

from hamseq.nwgen import NwParams
from hamseq.verify import Verdict, check_nw_theorem


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--min-n", type=int, default=5)
    parser.add_argument("--max-n", type=int, default=9)
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--budget", type=int, default=None, help="per-sequence realization cap (default: unlimited)")
    args = parser.parse_args()

    out = csv.writer(sys.stdout)
    out.writerow(["n", "k", "sequence", "verdict", "realizations", "seconds"])
    bad = 0
    for n in range(args.min_n, args.max_n + 1):
        for k in range(2, (n - 1) // 2 + 1):
            start = time.time()
            for r in check_nw_theorem(NwParams(n, k), budget=args.budget, jobs=args.jobs):
                bad += r.verdict is not Verdict.FORCIBLY_HAMILTONIAN
                out.writerow([n, k, str(r.sequence), r.verdict.value, r.realizations_checked, f"{time.time() - start:.2f}"])
                start = time.time()
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
