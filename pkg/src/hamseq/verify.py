"""Forcible-hamiltonicity verdicts.

:func:`classify` answers from theory alone (Chvatal's condition and the
Nash-Williams shape). :func:`verify_forcibly_hamiltonian` settles the question
by walking every labeled realization; a realization whose closure is complete
is accepted immediately, otherwise the closure is searched for a Hamilton
cycle. Negative verdicts always carry an explicit nonhamiltonian realization.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from enum import Enum
from functools import partial
from typing import Optional, Union

from hamseq.degseq import (
    ChvatalResult,
    DegreeSequence,
    chvatal_condition,
    is_exception_sequence,
    is_graphical,
    matches_theorem_2_3_shape,
)
from hamseq.errors import TooSmall
from hamseq.graphkit import (
    SimpleGraph,
    _enumerate_masks,
    circumference,
    closure_masks,
    hamiltonian_masks,
    is_biconnected,
    realization_subtrees,
)
from hamseq.nwgen import NwParams, enumerate_nw_sequences

__all__ = [
    "Verdict",
    "VerificationReport",
    "default_budget",
    "classify",
    "verify_forcibly_hamiltonian",
    "check_nw_theorem",
    "dirac_property_check",
]

# Budget policy: None means unlimited, "auto" defers to default_budget(n).
Budget = Union[int, None, str]

AUTO_BUDGET_CAP = 10**7


class Verdict(str, Enum):
    FORCIBLY_HAMILTONIAN = "FORCIBLY_HAMILTONIAN"
    NOT_FORCIBLY_HAMILTONIAN = "NOT_FORCIBLY_HAMILTONIAN"
    NOT_GRAPHICAL = "NOT_GRAPHICAL"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass
class VerificationReport:
    """Everything known about one sequence.

    ``realizations_checked`` and ``closure_accepts`` are ``None`` when no
    enumeration ran (reports from :func:`classify`). Counts are over labeled
    realizations. With several workers and a finite budget that cuts a
    subtree short, ``closure_accepts`` counts all work done in that subtree.
    """

    sequence: DegreeSequence
    graphical: bool
    chvatal: ChvatalResult
    nw_shape_k: Optional[int]
    exception: bool
    verdict: Verdict
    counterexample: Optional[SimpleGraph] = None
    realizations_checked: Optional[int] = None
    closure_accepts: Optional[int] = None

    def to_dict(self) -> dict:
        ce = self.counterexample
        return {
            "sequence": list(self.sequence.degrees),
            "graphical": self.graphical,
            "chvatal": {
                "satisfied": self.chvatal.satisfied,
                "failing_k": self.chvatal.failing_k,
            },
            "nw_shape_k": self.nw_shape_k,
            "exception": self.exception,
            "verdict": self.verdict.value,
            "counterexample": None if ce is None else {"n": ce.n, "edges": [list(e) for e in ce.edges()]},
            "realizations_checked": self.realizations_checked,
            "closure_accepts": self.closure_accepts,
        }


def default_budget(n: int) -> Optional[int]:
    """Unlimited up to 9 vertices, ``10**7`` realizations beyond."""
    return None if n <= 9 else AUTO_BUDGET_CAP


def _nw_shape_k(seq: DegreeSequence) -> Optional[int]:
    # d_1 = k pins down the only candidate
    n, k = seq.n, seq.degrees[0]
    if n < 5 or k < 2 or 2 * k >= n:
        return None
    return k if matches_theorem_2_3_shape(seq, k) else None


def classify(seq: DegreeSequence) -> VerificationReport:
    n = seq.n
    if n < 3:
        raise TooSmall(f"need n >= 3, got n = {n}")
    graphical = is_graphical(seq)
    chvatal = chvatal_condition(seq)
    k = _nw_shape_k(seq)
    exception = k is not None and is_exception_sequence(seq, k)
    if not graphical:
        verdict = Verdict.NOT_GRAPHICAL
    elif chvatal.satisfied or (k is not None and not exception):
        verdict = Verdict.FORCIBLY_HAMILTONIAN
    else:
        verdict = Verdict.INCONCLUSIVE
    return VerificationReport(seq, graphical, chvatal, k, exception, verdict)


@dataclass
class _ScanResult:
    checked: int
    accepts: int
    counterexample: Optional[tuple[int, ...]]
    truncated: bool


def _scan(seq: DegreeSequence, subtree: Optional[int], cap: Optional[int], use_closure: bool) -> _ScanResult:
    """Walk one subtree (or the whole stream) until a counterexample or ``cap``."""
    n = seq.n
    full = (1 << n) - 1
    checked = accepts = 0
    for adj in _enumerate_masks(seq, subtree):
        if cap is not None and checked == cap:
            return _ScanResult(checked, accepts, None, True)
        checked += 1
        if use_closure:
            closed = closure_masks(adj, n)
            if all(row | 1 << v == full for v, row in enumerate(closed)):
                accepts += 1
                continue
            hamiltonian = hamiltonian_masks(closed, n)
        else:
            hamiltonian = hamiltonian_masks(adj, n)
        if not hamiltonian:
            return _ScanResult(checked, accepts, adj, False)
    return _ScanResult(checked, accepts, None, False)


def _resolve_budget(budget: Budget, n: int) -> Optional[int]:
    if budget == "auto":
        return default_budget(n)
    if budget is None:
        return None
    budget = int(budget)
    if budget < 1:
        raise ValueError(f"budget must be positive, got {budget}")
    return budget


def verify_forcibly_hamiltonian(
    seq: DegreeSequence,
    budget: Budget = "auto",
    jobs: int = 1,
    use_closure: bool = True,
) -> VerificationReport:
    """Decide forcible hamiltonicity by exhausting the labeled realizations.

    Args:
        seq: sequence with at least 3 entries.
        budget: realization cap; ``"auto"`` applies :func:`default_budget`,
            ``None`` removes the cap. Hitting the cap gives ``INCONCLUSIVE``.
        jobs: worker processes. Subtrees of the search are handed out in
            order and merged in order, so the verdict, the counts and the
            counterexample all match the single-process run.
        use_closure: accept realizations with a complete closure without a
            cycle search. Turning it off never changes the verdict.

    Raises:
        TooSmall: if ``n < 3``.
    """
    report = classify(seq)
    if not report.graphical:
        report.realizations_checked = 0
        report.closure_accepts = 0
        return report
    cap = _resolve_budget(budget, seq.n)
    if jobs <= 1:
        result = _scan(seq, None, cap, use_closure)
    else:
        result = _scan_parallel(seq, cap, use_closure, jobs)

    report.realizations_checked = result.checked
    report.closure_accepts = result.accepts
    if result.counterexample is not None:
        report.verdict = Verdict.NOT_FORCIBLY_HAMILTONIAN
        report.counterexample = SimpleGraph(seq.n, result.counterexample)
    elif result.truncated:
        report.verdict = Verdict.INCONCLUSIVE
    else:
        report.verdict = Verdict.FORCIBLY_HAMILTONIAN
    return report


def _scan_parallel(seq: DegreeSequence, cap: Optional[int], use_closure: bool, jobs: int) -> _ScanResult:
    roots = realization_subtrees(seq)
    work = partial(_scan, seq, cap=cap, use_closure=use_closure)
    checked = accepts = 0
    with multiprocessing.Pool(jobs) as pool:
        for i, part in enumerate(pool.imap(work, range(len(roots)))):
            more_after = part.truncated or i + 1 < len(roots)
            if cap is not None and checked + part.checked > cap:
                # the cap falls inside this subtree
                return _ScanResult(cap, accepts + part.accepts, None, True)
            checked += part.checked
            accepts += part.accepts
            if part.counterexample is not None:
                return _ScanResult(checked, accepts, part.counterexample, False)
            if cap is not None and checked == cap and more_after:
                return _ScanResult(checked, accepts, None, True)
    return _ScanResult(checked, accepts, None, False)


def check_nw_theorem(p: NwParams, budget: Budget = "auto", jobs: int = 1) -> list[VerificationReport]:
    """Exhaustively verify every Nash-Williams (n, k)-sequence, in sorted order."""
    return [verify_forcibly_hamiltonian(seq, budget=budget, jobs=jobs) for seq in sorted(enumerate_nw_sequences(p))]


def dirac_property_check(g: SimpleGraph) -> bool:
    """``circumference >= min(n, 2 * min_degree)``; vacuously true unless 2-connected."""
    if not is_biconnected(g):
        return True
    return circumference(g) >= min(g.n, 2 * g.min_degree())
