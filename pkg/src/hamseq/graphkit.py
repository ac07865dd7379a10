"""Small labeled simple graphs stored as adjacency bitmasks.

Vertex ``v``'s neighbourhood is the integer ``adj[v]`` whose bit ``u`` is set
iff ``uv`` is an edge. Every routine here is exact and meant for graphs of a
dozen or so vertices.
"""

from __future__ import annotations

import random
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from hamseq.degseq import DegreeSequence, _erdos_gallai, check_nw_range
from hamseq.errors import InvalidEdge, InvalidParams

__all__ = [
    "SimpleGraph",
    "build_graph",
    "degree_sequence",
    "build_cnk",
    "build_exception_graph",
    "havel_hakimi_realize",
    "realization_subtrees",
    "enumerate_realizations",
    "closure",
    "closure_masks",
    "is_hamiltonian",
    "circumference",
    "is_biconnected",
    "to_edge_list",
    "from_edge_list",
]


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise InvalidEdge(f"adjacency has {len(self.adj)} rows for n = {self.n}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full or row >> v & 1:
                raise InvalidEdge(f"bad adjacency row for vertex {v}")
            for u in _bits(row):
                if not self.adj[u] >> v & 1:
                    raise InvalidEdge(f"adjacency not symmetric at ({u}, {v})")

    @classmethod
    def trusted(cls, n: int, adj: tuple[int, ...]) -> "SimpleGraph":
        """Skip validation; for adjacency produced by this module."""
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def degrees(self) -> list[int]:
        return [bin(row).count("1") for row in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def is_complete(self) -> bool:
        full = (1 << self.n) - 1
        return all(row | 1 << v == full for v, row in enumerate(self.adj))


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> SimpleGraph:
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidEdge(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise InvalidEdge(f"loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return SimpleGraph(n, tuple(adj))


def degree_sequence(g: SimpleGraph) -> DegreeSequence:
    return DegreeSequence(tuple(sorted(g.degrees())))


def _clique_edges(vertices: list[int]) -> list[tuple[int, int]]:
    return list(combinations(vertices, 2))


def _join_edges(left: list[int], right: list[int]) -> list[tuple[int, int]]:
    return [(u, v) for u in left for v in right]


def build_cnk(n: int, k: int) -> SimpleGraph:
    """``K_k join (complement(K_k) + K_{n-2k})``, Chvatal's nonhamiltonian extremal graph.

    Vertices ``0..k-1`` form the joined clique, ``k..2k-1`` are the
    independent set and the rest form the ``(n-2k)``-clique.
    """
    if k < 1 or 2 * k > n - 1:
        raise InvalidParams(f"need 1 <= k <= (n-1)/2, got n = {n}, k = {k}")
    hub = list(range(k))
    rest = list(range(k, n))
    big = list(range(2 * k, n))
    return build_graph(n, _clique_edges(hub) + _clique_edges(big) + _join_edges(hub, rest))


def build_exception_graph(n: int, k: int, j: int) -> SimpleGraph:
    """The two nonhamiltonian closures that can arise for the Nash-Williams shape.

    ``j = 1`` gives ``K_1 join (K_k + K_{n-k-1})`` with the cut vertex at
    label 0; ``j = k`` gives :func:`build_cnk`.
    """
    check_nw_range(n, k)
    if j == k:
        return build_cnk(n, k)
    if j != 1:
        raise InvalidParams(f"j must be 1 or k = {k}, got {j}")
    small = list(range(1, k + 1))
    big = list(range(k + 1, n))
    return build_graph(n, _clique_edges(small) + _clique_edges(big) + _join_edges([0], small + big))


def havel_hakimi_realize(seq: DegreeSequence) -> Optional[SimpleGraph]:
    """Realize ``seq`` greedily, or return ``None`` if it is not graphical.

    Vertex ``i`` gets the ``i``-th degree of the nondecreasing sequence.
    """
    n = seq.n
    residual = list(seq.degrees)
    adj = [0] * n
    for _ in range(n):
        order = sorted(range(n), key=lambda v: (-residual[v], v))
        v = order[0]
        need = residual[v]
        if need == 0:
            break
        targets = order[1 : need + 1]
        if len(targets) < need or residual[targets[-1]] == 0:
            return None
        residual[v] = 0
        for u in targets:
            residual[u] -= 1
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    if any(residual):
        return None
    return SimpleGraph(n, tuple(adj))


# -- realization enumeration -------------------------------------------------


def _residual_ok(residual: list[int], open_mask: int) -> bool:
    desc = sorted((residual[u] for u in _bits(open_mask)), reverse=True)
    if not desc or desc[0] == 0:
        return True
    if desc[0] >= len(desc):
        return False
    return _erdos_gallai(desc)


def _pick(residual: list[int], open_mask: int) -> int:
    best, best_r = -1, -1
    for u in _bits(open_mask):
        if residual[u] > best_r:
            best, best_r = u, residual[u]
    return best


def _choices(residual: list[int], open_mask: int, v: int) -> Iterator[int]:
    """Neighbour sets for ``v`` among the other open vertices that leave a
    graphical residual, as bitmasks in lexicographic order of their members."""
    rest = open_mask & ~(1 << v)
    candidates = [u for u in _bits(rest) if residual[u] > 0]
    need = residual[v]
    for combo in combinations(candidates, need):
        for u in combo:
            residual[u] -= 1
        if _residual_ok(residual, rest):
            mask = 0
            for u in combo:
                mask |= 1 << u
            yield mask
        for u in combo:
            residual[u] += 1


def _targets(seq: DegreeSequence) -> list[int]:
    # vertex 0 carries the largest degree
    return list(seq.descending())


def realization_subtrees(seq: DegreeSequence) -> list[int]:
    """Neighbour sets of the first branching vertex, one per independent subtree.

    Passing ``subtree=i`` to :func:`enumerate_realizations` restricts the
    stream to the ``i``-th of these; concatenating the subtrees in index
    order reproduces the full stream.
    """
    residual = _targets(seq)
    if not _residual_ok(residual, (1 << seq.n) - 1):
        return []
    open_mask = (1 << seq.n) - 1
    v = _pick(residual, open_mask)
    if residual[v] == 0:
        return [0]
    return list(_choices(residual, open_mask, v))


def enumerate_realizations(
    seq: DegreeSequence, subtree: Optional[int] = None
) -> Iterator[SimpleGraph]:
    """Every labeled graph on ``0..n-1`` in which vertex ``i`` has the ``i``-th
    largest degree of ``seq``, each exactly once.

    The open vertex with the largest residual degree (lowest label on ties)
    takes all of its remaining neighbours at once; a branch survives only if
    the residual degrees of the remaining open vertices are still graphical.
    A non-graphical sequence yields nothing.
    """
    n = seq.n
    for adj in _enumerate_masks(seq, subtree):
        yield SimpleGraph.trusted(n, adj)


def _enumerate_masks(seq: DegreeSequence, subtree: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    n = seq.n
    residual = _targets(seq)
    full = (1 << n) - 1
    if not _residual_ok(residual, full):
        return
    adj = [0] * n

    def attach(v: int, mask: int) -> None:
        adj[v] |= mask
        for u in _bits(mask):
            adj[u] |= 1 << v
            residual[u] -= 1
        residual[v] = 0

    def detach(v: int, mask: int, r: int) -> None:
        adj[v] &= ~mask
        for u in _bits(mask):
            adj[u] &= ~(1 << v)
            residual[u] += 1
        residual[v] = r

    def walk(open_mask: int) -> Iterator[tuple[int, ...]]:
        v = _pick(residual, open_mask)
        r = residual[v]
        if r == 0:
            yield tuple(adj)
            return
        rest = open_mask & ~(1 << v)
        for mask in list(_choices(residual, open_mask, v)):
            attach(v, mask)
            yield from walk(rest)
            detach(v, mask, r)

    if subtree is None:
        yield from walk(full)
        return
    roots = realization_subtrees(seq)
    if not 0 <= subtree < len(roots):
        raise IndexError(f"subtree {subtree} out of range [0, {len(roots)})")
    v = _pick(residual, full)
    r = residual[v]
    if r == 0:
        yield tuple(adj)
        return
    attach(v, roots[subtree])
    yield from walk(full & ~(1 << v))


# -- closure -----------------------------------------------------------------


def closure_masks(adj: Iterable[int], n: int) -> list[int]:
    """Bondy-Chvatal closure on raw adjacency masks.

    Joins eligible pairs vertex by vertex rather than in strict pair order;
    the closure does not depend on the join order, so the result matches
    :func:`closure`.
    """
    adj = list(adj)
    deg = [bin(row).count("1") for row in adj]
    full = (1 << n) - 1
    changed = True
    while changed:
        changed = False
        for u in range(n):
            missing = full ^ adj[u] ^ (1 << u)
            threshold = n - deg[u]
            while missing:
                low = missing & -missing
                missing ^= low
                v = low.bit_length() - 1
                if deg[v] >= threshold:
                    adj[u] |= low
                    adj[v] |= 1 << u
                    deg[u] += 1
                    deg[v] += 1
                    threshold -= 1
                    changed = True
    return adj


def _eligible_pairs(adj: list[int], deg: list[int], n: int) -> Iterator[tuple[int, int]]:
    for u in range(n):
        for v in range(u + 1, n):
            if not adj[u] >> v & 1 and deg[u] + deg[v] >= n:
                yield u, v


def closure(g: SimpleGraph, rng: Optional[random.Random] = None) -> SimpleGraph:
    """Join nonadjacent pairs with degree sum at least ``n`` until none remain.

    Without ``rng`` the first eligible pair in lexicographic order is joined
    and the scan restarts. With ``rng`` a uniformly random eligible pair is
    joined at every step, which is how order independence is tested.
    """
    n = g.n
    adj = list(g.adj)
    deg = g.degrees()
    while True:
        if rng is None:
            pair = next(_eligible_pairs(adj, deg, n), None)
        else:
            pairs = list(_eligible_pairs(adj, deg, n))
            pair = rng.choice(pairs) if pairs else None
        if pair is None:
            return SimpleGraph(n, tuple(adj))
        u, v = pair
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        deg[u] += 1
        deg[v] += 1


# -- cycles ------------------------------------------------------------------


def _connected_within(adj: tuple[int, ...] | list[int], mask: int) -> bool:
    if not mask:
        return True
    seen = mask & -mask
    frontier = seen
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        new = adj[low.bit_length() - 1] & mask & ~seen
        seen |= new
        frontier |= new
    return seen == mask


def hamiltonian_masks(adj: tuple[int, ...] | list[int], n: int) -> bool:
    """Backtracking Hamilton-cycle search on raw adjacency masks."""
    if n < 3:
        return False
    full = (1 << n) - 1
    for row in adj:
        if row & (row - 1) == 0:
            return False
    if not _connected_within(adj, full):
        return False

    def extend(v: int, unvisited: int) -> bool:
        if not unvisited:
            return bool(adj[v] & 1)
        # every unvisited vertex still needs two usable neighbours
        usable = unvisited | 1 | (1 << v)
        for w in _bits(unvisited):
            row = adj[w] & usable
            if row & (row - 1) == 0:
                return False
        step = adj[v] & unvisited
        while step:
            low = step & -step
            step ^= low
            if extend(low.bit_length() - 1, unvisited ^ low):
                return True
        return False

    return extend(0, full ^ 1)


def is_hamiltonian(g: SimpleGraph) -> bool:
    """Exact test for a spanning cycle. Graphs with fewer than 3 vertices never have one."""
    return hamiltonian_masks(g.adj, g.n)


def circumference(g: SimpleGraph) -> int:
    """Length of a longest cycle, 0 for a forest.

    Each cycle is found from its smallest vertex ``s`` by a simple-path
    search restricted to vertices above ``s``.
    """
    n, adj = g.n, g.adj
    best = 0
    for s in range(n):
        if best == n - s:
            break
        allowed = ((1 << n) - 1) >> (s + 1) << (s + 1)

        def grow(v: int, visited: int, length: int) -> None:
            nonlocal best
            if length >= 3 and adj[v] >> s & 1 and length > best:
                best = length
            for u in _bits(adj[v] & allowed & ~visited):
                grow(u, visited | 1 << u, length + 1)

        grow(s, 1 << s, 1)
    return best


def is_biconnected(g: SimpleGraph) -> bool:
    """Connected, at least 3 vertices, and no cut vertex."""
    n = g.n
    if n < 3:
        return False
    full = (1 << n) - 1
    if not _connected_within(g.adj, full):
        return False
    return all(_connected_within(g.adj, full ^ (1 << v)) for v in range(n))


# -- edge-list text format ---------------------------------------------------


def to_edge_list(g: SimpleGraph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> SimpleGraph:
    lines = [line.split() for line in text.splitlines() if line.strip()]
    if not lines or len(lines[0]) != 2 or lines[0][0] != "n":
        raise InvalidEdge("edge list must start with a line 'n <count>'")
    n = int(lines[0][1])
    edges = []
    for parts in lines[1:]:
        if len(parts) != 2:
            raise InvalidEdge(f"malformed edge line: {' '.join(parts)!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return build_graph(n, edges)
