"""List forcibly hamiltonian sequences that neither Chvatal's condition nor
the Nash-Williams shape certifies, for small n (exhaustive, so keep n <= 8)."""

import argparse
import sys
from itertools import combinations_with_replacement

from hamseq.degseq import DegreeSequence, is_graphical
from hamseq.verify import Verdict, classify, verify_forcibly_hamiltonian


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=7)
    args = parser.parse_args()

    for n in range(3, args.max_n + 1):
        graphical = certified = forcibly = 0
        gap = []
        for degrees in combinations_with_replacement(range(n), n):
            seq = DegreeSequence(degrees)
            if not is_graphical(seq):
                continue
            graphical += 1
            if classify(seq).verdict is Verdict.FORCIBLY_HAMILTONIAN:
                certified += 1
                forcibly += 1
            elif verify_forcibly_hamiltonian(seq, budget=None).verdict is Verdict.FORCIBLY_HAMILTONIAN:
                forcibly += 1
                gap.append(seq)
        print(f"n={n}: {graphical} graphical, {forcibly} forcibly hamiltonian, {certified} certified, {len(gap)} uncertified")
        for seq in gap:
            print(f"    {seq}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
