"""Nash-Williams (n, k)-sequence generator.

A sequence is built from one of two foundational sequences (``k`` copies of
``k`` followed by ``n-k`` copies of ``n-k-1``, with the last entry optionally
bumped to ``n-k``) by adding a short nondecreasing modifier ``pi_prime`` to
its final ``k-1`` entries. The foundational sequence is picked so the total
degree stays even.
"""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Iterator
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb

from hamseq.degseq import DegreeSequence, check_nw_range, normalize
from hamseq.errors import InvalidParams

__all__ = [
    "NwParams",
    "PiPrime",
    "foundational_sequences",
    "enumerate_pi_primes",
    "nw_construct",
    "nw_fibers",
    "enumerate_nw_sequences",
    "count_lower_bound",
    "count_total_lower_bound",
]


@dataclass(frozen=True)
class NwParams:
    n: int
    k: int

    def __post_init__(self) -> None:
        check_nw_range(self.n, self.k)


def excluded_pi_prime(k: int) -> tuple[int, ...]:
    """The modifier ``(0, ..., 0, k-1)``, which would reproduce the exception shape."""
    return (0,) * (k - 2) + (k - 1,)


@dataclass(frozen=True)
class PiPrime:
    """Nondecreasing modifier of length ``k-1`` with entries in ``[0, k-1]``."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(int(x) for x in self.entries)
        object.__setattr__(self, "entries", entries)
        k = len(entries) + 1
        if k < 2:
            raise InvalidParams("pi_prime must have length k-1 >= 1")
        if any(x < 0 or x > k - 1 for x in entries):
            raise InvalidParams(f"pi_prime entries must lie in [0, {k - 1}]: {entries}")
        if any(a > b for a, b in zip(entries, entries[1:])):
            raise InvalidParams(f"pi_prime must be nondecreasing: {entries}")
        if entries == excluded_pi_prime(k):
            raise InvalidParams(
                f"pi_prime {entries} = (0, ..., 0, k-1) is excluded by construction"
            )

    @property
    def k(self) -> int:
        return len(self.entries) + 1

    def total(self) -> int:
        return sum(self.entries)


def foundational_sequences(p: NwParams) -> tuple[DegreeSequence, DegreeSequence]:
    n, k = p.n, p.k
    body = (k,) * k + (n - k - 1,) * (n - k - 1)
    return DegreeSequence(body + (n - k - 1,)), DegreeSequence(body + (n - k,))


def enumerate_pi_primes(k: int) -> Iterator[PiPrime]:
    """Every admissible modifier for ``k``, in lexicographic order.

    Yields ``C(2k-2, k-1) - 1`` items.
    """
    if k < 2:
        raise InvalidParams(f"need k >= 2, got {k}")
    skip = excluded_pi_prime(k)
    for entries in combinations_with_replacement(range(k), k - 1):
        if entries != skip:
            yield PiPrime(entries)


def nw_construct(p: NwParams, pi_prime: PiPrime) -> DegreeSequence:
    if pi_prime.k != p.k:
        raise InvalidParams(f"pi_prime has length {len(pi_prime.entries)}, need k-1 = {p.k - 1}")
    first, second = foundational_sequences(p)
    base = first if first.total() % 2 == pi_prime.total() % 2 else second
    degrees = list(base.degrees)
    offset = p.n - (p.k - 1)
    for i, x in enumerate(pi_prime.entries):
        degrees[offset + i] += x
    return normalize(degrees)


def nw_fibers(p: NwParams) -> dict[DegreeSequence, list[PiPrime]]:
    """Group the admissible modifiers by the sequence they produce."""
    fibers: dict[DegreeSequence, list[PiPrime]] = defaultdict(list)
    for pi_prime in enumerate_pi_primes(p.k):
        fibers[nw_construct(p, pi_prime)].append(pi_prime)
    return dict(fibers)


def enumerate_nw_sequences(p: NwParams) -> set[DegreeSequence]:
    return set(nw_fibers(p))


def count_lower_bound(k: int) -> Fraction:
    """``(C(2(k-1), k-1) - 1) / 2`` as an exact fraction."""
    if k < 2:
        raise InvalidParams(f"need k >= 2, got {k}")
    return Fraction(comb(2 * (k - 1), k - 1) - 1, 2)


def count_total_lower_bound(n: int) -> Fraction:
    if n < 5:
        raise InvalidParams(f"need n >= 5, got {n}")
    return sum((count_lower_bound(k) for k in range(2, (n - 1) // 2 + 1)), Fraction(0))
