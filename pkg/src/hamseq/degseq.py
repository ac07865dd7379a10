"""Degree-sequence predicates.

Sequences are stored nondecreasing, ``d_1 <= ... <= d_n``, and every public
function in this module uses 1-based indices in its docstrings to match that
convention. Graphicality works on the nonincreasing reversal internally.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import Optional

from hamseq.errors import InvalidDegree, InvalidParams, LengthMismatch, ShapeMismatch, TooSmall

__all__ = [
    "DegreeSequence",
    "ChvatalResult",
    "normalize",
    "is_graphical",
    "eg_strength",
    "chvatal_condition",
    "chvatal_extremal_sequence",
    "majorizes",
    "matches_theorem_2_3_shape",
    "is_exception_sequence",
]


@dataclass(frozen=True, order=True)
class DegreeSequence:
    """A nondecreasing sequence of vertex degrees.

    Build one with :func:`normalize` when the input order is arbitrary; the
    constructor itself refuses unsorted input.
    """

    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        degrees = tuple(int(d) for d in self.degrees)
        object.__setattr__(self, "degrees", degrees)
        n = len(degrees)
        if n < 1:
            raise InvalidDegree("a degree sequence needs at least one vertex")
        for d in degrees:
            if d < 0 or d > n - 1:
                raise InvalidDegree(f"degree {d} outside [0, {n - 1}] for n = {n}")
        if any(a > b for a, b in zip(degrees, degrees[1:])):
            raise InvalidDegree(f"degrees not nondecreasing: {degrees}")

    @property
    def n(self) -> int:
        return len(self.degrees)

    def d(self, j: int) -> int:
        """1-based access, ``d(1)`` is the smallest degree."""
        if not 1 <= j <= self.n:
            raise IndexError(j)
        return self.degrees[j - 1]

    def descending(self) -> tuple[int, ...]:
        return self.degrees[::-1]

    def total(self) -> int:
        return sum(self.degrees)

    def __len__(self) -> int:
        return len(self.degrees)

    def __iter__(self):
        return iter(self.degrees)

    def __str__(self) -> str:
        return ",".join(map(str, self.degrees))


@dataclass(frozen=True)
class ChvatalResult:
    satisfied: bool
    failing_k: Optional[int] = None

    def __post_init__(self) -> None:
        if self.satisfied != (self.failing_k is None):
            raise ValueError("failing_k must be present exactly when the condition fails")


def normalize(raw: Iterable[int]) -> DegreeSequence:
    """Sort ``raw`` into canonical nondecreasing order.

    Raises:
        InvalidDegree: if an entry is negative or at least ``len(raw)``.
    """
    values = [int(x) for x in raw]
    n = len(values)
    for d in values:
        if d < 0 or d > n - 1:
            raise InvalidDegree(f"degree {d} outside [0, {n - 1}] for n = {n}")
    return DegreeSequence(tuple(sorted(values)))


def _strength(desc: Sequence[int]) -> int:
    strength = 0
    for i, d in enumerate(desc, start=1):
        if d >= i:
            strength = i
        else:
            break
    return strength


def eg_strength(seq: DegreeSequence) -> int:
    """Largest 1-based index ``i`` of the nonincreasing reversal with ``d_i >= i``.

    Returns 0 when every degree is zero. Because the reversal is
    nonincreasing and ``i`` increasing, the indices with ``d_i >= i`` form a
    prefix, so the scan stops at the first failure.
    """
    return _strength(seq.descending())


def _erdos_gallai(desc: Sequence[int]) -> bool:
    """Erdos-Gallai inequalities on a nonincreasing list, for d_n < j <= D only."""
    if sum(desc) % 2:
        return False
    n = len(desc)
    if n == 0:
        return True
    top = _strength(desc)
    lo = desc[-1]
    lhs = sum(desc[:lo])
    for j in range(lo + 1, top + 1):
        lhs += desc[j - 1]
        rhs = j * (j - 1)
        for i in range(j, n):
            rhs += desc[i] if desc[i] < j else j
        if lhs > rhs:
            return False
    return True


def is_graphical(seq: DegreeSequence) -> bool:
    """True iff some simple graph has degree sequence ``seq``.

    The single-vertex sequence ``(0)`` counts as graphical.
    """
    return _erdos_gallai(seq.descending())


def chvatal_condition(seq: DegreeSequence) -> ChvatalResult:
    """Check ``d_k >= k+1 or d_{n-k} >= n-k`` for every ``1 <= k <= (n-1)/2``.

    Reports the least violating ``k`` when the condition fails.

    Raises:
        TooSmall: if ``n < 3``.
    """
    n = seq.n
    if n < 3:
        raise TooSmall(f"Chvatal's condition needs n >= 3, got n = {n}")
    d = seq.degrees
    k = 1
    while 2 * k <= n - 1:
        if d[k - 1] <= k and d[n - k - 1] <= n - k - 1:
            return ChvatalResult(False, k)
        k += 1
    return ChvatalResult(True)


def _check_chvatal_range(n: int, k: int) -> None:
    if k < 1 or 2 * k > n - 1:
        raise InvalidParams(f"need 1 <= k <= (n-1)/2, got n = {n}, k = {k}")


def chvatal_extremal_sequence(n: int, k: int) -> DegreeSequence:
    """Degree sequence of ``K_k join (complement(K_k) + K_{n-2k})``.

    ``k`` copies of ``k``, then ``n-2k`` copies of ``n-k-1``, then ``k``
    copies of ``n-1``.
    """
    _check_chvatal_range(n, k)
    return DegreeSequence((k,) * k + (n - k - 1,) * (n - 2 * k) + (n - 1,) * k)


def majorizes(a: DegreeSequence, b: DegreeSequence) -> bool:
    if a.n != b.n:
        raise LengthMismatch(f"lengths differ: {a.n} vs {b.n}")
    return all(x >= y for x, y in zip(a.degrees, b.degrees))


def check_nw_range(n: int, k: int) -> None:
    """Raise :class:`InvalidParams` unless ``n >= 5`` and ``2 <= k < n/2``."""
    if n < 5 or k < 2 or 2 * k >= n:
        raise InvalidParams(f"need n >= 5 and 2 <= k < n/2, got n = {n}, k = {k}")


def matches_theorem_2_3_shape(seq: DegreeSequence, k: int) -> bool:
    """True iff ``d_1 = ... = d_k = k`` and ``d_{k+1} = ... = d_{n-k+1} = n-k-1``.

    The last ``k-1`` entries are unconstrained.
    """
    n = seq.n
    check_nw_range(n, k)
    d = seq.degrees
    return all(x == k for x in d[:k]) and all(x == n - k - 1 for x in d[k : n - k + 1])


def is_exception_sequence(seq: DegreeSequence, k: int) -> bool:
    """The single sequence of the right shape that is *not* forcibly hamiltonian:
    ``d_j = n-k-1`` for ``n-k+2 <= j <= n-1`` and ``d_n = n-1``.

    Raises:
        ShapeMismatch: if ``seq`` does not satisfy :func:`matches_theorem_2_3_shape`.
    """
    if not matches_theorem_2_3_shape(seq, k):
        raise ShapeMismatch(f"{seq} does not have the (n, k) = ({seq.n}, {k}) shape")
    n = seq.n
    d = seq.degrees
    return all(x == n - k - 1 for x in d[n - k + 1 : n - 1]) and d[n - 1] == n - 1
