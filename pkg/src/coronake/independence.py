"""Exact maximum independent sets."""

from __future__ import annotations

from .graph import Graph, SizeLimitError, iter_bits, popcount
from .matching import mate_array

MAX_DIRECT_VERTICES = 40
MAX_BRUTE_FORCE_VERTICES = 20


def _matching_size_within(adj: tuple[int, ...], mask: int) -> int:
    vertices = list(iter_bits(mask))
    index = {v: i for i, v in enumerate(vertices)}
    nbrs = [[index[u] for u in iter_bits(adj[v] & mask)] for v in vertices]
    return sum(1 for i, j in enumerate(mate_array(nbrs)) if i < j)


def _greedy(adj: tuple[int, ...], mask: int) -> int:
    chosen = 0
    while mask:
        v = min(iter_bits(mask), key=lambda w: (popcount(adj[w] & mask), w))
        chosen |= 1 << v
        mask &= ~(adj[v] | 1 << v)
    return chosen


def maximum_independent_set(g: Graph, limit: int = MAX_DIRECT_VERTICES) -> frozenset[int]:
    """Branch and bound: branch on the lowest-index vertex of maximum degree
    (take it, or drop it), and cut any branch that cannot beat the incumbent
    even under the bound ``alpha <= |remaining| - mu(remaining)``.
    """
    if g.n > limit:
        raise SizeLimitError(f"direct independence solver is limited to n <= {limit}, got {g.n}")
    adj = g.adj
    best = _greedy(adj, (1 << g.n) - 1)
    best_size = popcount(best)

    def search(cand: int, chosen: int, size: int) -> None:
        nonlocal best, best_size
        if size + popcount(cand) <= best_size:
            return
        pivot, pivot_degree = -1, -1
        for v in iter_bits(cand):
            d = popcount(adj[v] & cand)
            if d > pivot_degree:
                pivot, pivot_degree = v, d
        if pivot_degree <= 0:
            # remaining candidates are pairwise non-adjacent
            best, best_size = chosen | cand, size + popcount(cand)
            return
        if size + popcount(cand) - _matching_size_within(adj, cand) <= best_size:
            return
        bit = 1 << pivot
        search(cand & ~(adj[pivot] | bit), chosen | bit, size + 1)
        search(cand & ~bit, chosen, size)

    search((1 << g.n) - 1, 0, 0)
    return frozenset(iter_bits(best))


def independence_number(g: Graph, limit: int = MAX_DIRECT_VERTICES) -> int:
    return len(maximum_independent_set(g, limit))


def is_independent(g: Graph, s: frozenset[int] | set[int]) -> bool:
    return all(not g.has_edge(u, v) for u in s for v in s if u < v)


def brute_force_alpha(g: Graph) -> int:
    """Exhaustive independence number without any bounding; test oracle only."""
    if g.n > MAX_BRUTE_FORCE_VERTICES:
        raise SizeLimitError(f"brute-force independence supports n <= {MAX_BRUTE_FORCE_VERTICES}")
    adj = g.adj

    def best(cand: int) -> int:
        if not cand:
            return 0
        low = cand & -cand
        v = low.bit_length() - 1
        return max(best(cand ^ low), 1 + best(cand & ~(adj[v] | low)))

    return best((1 << g.n) - 1)
