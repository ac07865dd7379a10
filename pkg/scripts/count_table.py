"""Tabulate Nash-Williams sequence counts against the binomial lower bound."""

import argparse
import csv
import sys

from hamseq.nwgen import NwParams, count_lower_bound, count_total_lower_bound, nw_fibers


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=16)
    args = parser.parse_args()

    out = csv.writer(sys.stdout)
    out.writerow(["n", "k", "count", "bound", "modifiers", "max_fiber"])
    for n in range(5, args.max_n + 1):
        total = 0
        for k in range(2, (n - 1) // 2 + 1):
            fibers = nw_fibers(NwParams(n, k))
            total += len(fibers)
            modifiers = sum(len(f) for f in fibers.values())
            out.writerow([n, k, len(fibers), count_lower_bound(k), modifiers, max(map(len, fibers.values()))])
        out.writerow([n, "total", total, count_total_lower_bound(n), "", ""])
    return 0


if __name__ == "__main__":
    sys.exit(main())
