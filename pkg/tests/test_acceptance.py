"""Exit criteria. Each test prints one PASS/FAIL line; run with ``pytest tests/test_acceptance.py -v``.

Every criterion is exact, so there are no numeric tolerances to tune.
"""

import os
import random
import time
from itertools import combinations_with_replacement
from math import comb

from hamseq.degseq import (
    DegreeSequence,
    chvatal_condition,
    chvatal_extremal_sequence,
    is_graphical,
    majorizes,
)
from hamseq.graphkit import (
    SimpleGraph,
    build_cnk,
    build_exception_graph,
    circumference,
    closure,
    degree_sequence,
    enumerate_realizations,
    havel_hakimi_realize,
    is_biconnected,
    is_hamiltonian,
)
from hamseq.nwgen import NwParams, enumerate_nw_sequences, nw_fibers
from hamseq.verify import Verdict, verify_forcibly_hamiltonian

import oracles

JOBS = int(os.environ.get("HAMSEQ_JOBS", os.cpu_count() or 1))
SEED = 20261018


def nw_range(lo, hi):
    return [(n, k) for n in range(lo, hi + 1) for k in range(2, n) if 2 * k < n]


def exception_sequence(n, k):
    return DegreeSequence((k,) * k + (n - k - 1,) * (n - k - 1) + (n - 1,))


def graphical_sequences(n):
    for degrees in combinations_with_replacement(range(n), n):
        seq = DegreeSequence(degrees)
        if is_graphical(seq):
            yield seq


def announce(capsys, number, title, failures, detail=""):
    ok = not failures
    with capsys.disabled():
        print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}{' - ' + detail if detail else ''}")
        for line in failures[:10]:
            print(f"    {line}")
    assert ok, failures[:10]


def random_graph(rng, n, p=None):
    p = rng.random() if p is None else p
    pairs = oracles.all_pairs(n)
    subset = sum(1 << i for i in range(len(pairs)) if rng.random() < p)
    return SimpleGraph(n, oracles.graph_from_subset(n, pairs, subset))


def test_criterion_1_nash_williams_soundness(capsys):
    failures = []
    checked = 0
    start = time.time()
    for n, k in nw_range(5, 9):
        for seq in sorted(enumerate_nw_sequences(NwParams(n, k))):
            if not is_graphical(seq):
                failures.append(f"{seq} not graphical")
            if chvatal_condition(seq).failing_k != k:
                failures.append(f"{seq} fails Chvatal at {chvatal_condition(seq).failing_k}, not {k}")
            report = verify_forcibly_hamiltonian(seq, budget=None, jobs=JOBS)
            checked += report.realizations_checked
            if report.verdict is not Verdict.FORCIBLY_HAMILTONIAN:
                failures.append(f"{seq}: {report.verdict.value}")
    detail = f"{checked} realizations in {time.time() - start:.0f}s"
    announce(capsys, 1, "every Nash-Williams sequence with 5 <= n <= 9 is forcibly hamiltonian", failures, detail)


def test_criterion_2_exception_refutation(capsys):
    failures = []
    for n, k in nw_range(5, 9):
        seq = exception_sequence(n, k)
        report = verify_forcibly_hamiltonian(seq, budget=None)
        if report.verdict is not Verdict.NOT_FORCIBLY_HAMILTONIAN:
            failures.append(f"{seq}: {report.verdict.value}")
        elif degree_sequence(report.counterexample) != seq or is_hamiltonian(report.counterexample):
            failures.append(f"{seq}: bad counterexample")
        g = build_exception_graph(n, k, 1)
        if is_hamiltonian(g) or degree_sequence(g) != seq:
            failures.append(f"build_exception_graph({n}, {k}, 1) does not witness {seq}")
    announce(capsys, 2, "exception sequences are refuted with matching witnesses", failures)


def test_criterion_3_chvatal_soundness(capsys):
    failures = []
    count = 0
    for n in range(3, 8):
        for seq in graphical_sequences(n):
            if chvatal_condition(seq).satisfied:
                count += 1
                verdict = verify_forcibly_hamiltonian(seq, budget=None).verdict
                if verdict is not Verdict.FORCIBLY_HAMILTONIAN:
                    failures.append(f"{seq}: {verdict.value}")
    announce(capsys, 3, "Chvatal-satisfying sequences with n <= 7 are forcibly hamiltonian", failures, f"{count} sequences")


def test_criterion_4_chvatal_sharpness(capsys):
    failures = []
    count = 0
    for n in range(3, 9):
        for seq in graphical_sequences(n):
            for k in range(1, (n - 1) // 2 + 1):
                if seq.d(k) <= k and seq.d(n - k) <= n - k - 1:
                    count += 1
                    if not majorizes(chvatal_extremal_sequence(n, k), seq):
                        failures.append(f"d*({n},{k}) does not majorize {seq}")
        for k in range(1, (n - 1) // 2 + 1):
            g = build_cnk(n, k)
            if is_hamiltonian(g) or degree_sequence(g) != chvatal_extremal_sequence(n, k):
                failures.append(f"C_({n},{k}) is not a nonhamiltonian realization of d*")
    announce(capsys, 4, "d* majorizes every failing sequence with n <= 8; C_{n,k} realizes d*", failures, f"{count} (sequence, k) pairs")


def _closure_failures(g, rng, orders=10):
    failures = []
    c = closure(g)
    if is_hamiltonian(g) != is_hamiltonian(c):
        failures.append(f"hamiltonicity differs for {g.adj}")
    if closure(c) != c:
        failures.append(f"closure not idempotent for {g.adj}")
    for _ in range(orders):
        if closure(g, rng=rng) != c:
            failures.append(f"closure depends on join order for {g.adj}")
            break
    return failures


def test_criterion_5_closure_equivalence(capsys):
    rng = random.Random(SEED)
    failures = []
    graphs = 0
    for n in range(1, 7):
        for adj in oracles.all_graphs(n):
            graphs += 1
            failures += _closure_failures(SimpleGraph(n, adj), rng)
    for _ in range(10_000):
        graphs += 1
        failures += _closure_failures(random_graph(rng, 7), rng)
    announce(capsys, 5, "closure preserves hamiltonicity, is idempotent and order independent", failures, f"{graphs} graphs")


def _dirac_failure(g):
    if not is_biconnected(g):
        return None
    if circumference(g) < min(g.n, 2 * g.min_degree()):
        return f"{g.adj}: circumference {circumference(g)}"
    return None


def test_criterion_6_dirac_bound(capsys):
    rng = random.Random(SEED + 1)
    failures = []
    twoconn = 0
    for n in range(3, 7):
        for adj in oracles.all_graphs(n):
            g = SimpleGraph(n, adj)
            twoconn += is_biconnected(g)
            if (f := _dirac_failure(g)) is not None:
                failures.append(f)
    for _ in range(5_000):
        g = random_graph(rng, 7)
        twoconn += is_biconnected(g)
        if (f := _dirac_failure(g)) is not None:
            failures.append(f)
    announce(capsys, 6, "circumference >= min(n, 2*delta) on 2-connected graphs", failures, f"{twoconn} 2-connected graphs")


def test_criterion_7_graphicality_oracle(capsys):
    failures = []
    count = 0
    for n in range(1, 8):
        for degrees in combinations_with_replacement(range(n), n):
            count += 1
            seq = DegreeSequence(degrees)
            hh = havel_hakimi_realize(seq)
            if is_graphical(seq) != (hh is not None):
                failures.append(f"{degrees}: Erdos-Gallai {is_graphical(seq)}, Havel-Hakimi {hh is not None}")
            if hh is not None and degree_sequence(hh) != seq:
                failures.append(f"{degrees}: Havel-Hakimi realization has the wrong degrees")
    announce(capsys, 7, "Erdos-Gallai agrees with Havel-Hakimi for n <= 7", failures, f"{count} sequences")


EXACT_COUNTS = {(5, 2): 1, (7, 2): 1, (7, 3): 3, (9, 3): 3}


def test_criterion_8_counting(capsys):
    failures = []
    for n, k in nw_range(5, 12):
        p = NwParams(n, k)
        fibers = nw_fibers(p)
        bound = comb(2 * k - 2, k - 1) - 1
        if 2 * len(fibers) < bound:
            failures.append(f"({n},{k}): {len(fibers)} sequences, 2*count < {bound}")
        if any(len(f) > 2 for f in fibers.values()):
            failures.append(f"({n},{k}): a fiber has more than 2 modifiers")
        if set(fibers) != enumerate_nw_sequences(p):
            failures.append(f"({n},{k}): fibers disagree with enumeration")
        if (n, k) in EXACT_COUNTS and len(fibers) != EXACT_COUNTS[(n, k)]:
            failures.append(f"({n},{k}): expected {EXACT_COUNTS[(n, k)]}, got {len(fibers)}")
    announce(capsys, 8, "Nash-Williams counts meet the binomial bound for 5 <= n <= 12", failures)


def test_criterion_9_realization_oracle(capsys):
    failures = []
    count = 0
    for n in range(1, 6):
        for seq in graphical_sequences(n):
            count += 1
            got = [g.adj for g in enumerate_realizations(seq)]
            expected = oracles.brute_realizations(list(seq.descending()))
            if len(got) != len(set(got)) or set(got) != set(expected):
                failures.append(f"{seq}: {len(got)} enumerated vs {len(expected)} by brute force")
    announce(capsys, 9, "realization enumeration equals brute-force filtering for n <= 5", failures, f"{count} sequences")
