"""Independent brute-force oracles and small builders shared by the tests."""

from __future__ import annotations

import itertools
import random
from functools import reduce

from coronake.graph import Graph, disjoint_union, edgeless


def union(*graphs: Graph) -> Graph:
    return reduce(disjoint_union, graphs, edgeless(0))


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    if p is None:
        p = rng.uniform(0.15, 0.85)
    return Graph.from_edges(n, [(i, j) for j in range(n) for i in range(j) if rng.random() < p])


def upper_bits(g: Graph, order) -> tuple[int, ...]:
    return tuple(int(g.has_edge(order[i], order[j])) for j in range(g.n) for i in range(j))


def naive_canonical(g: Graph) -> tuple[int, ...]:
    """Least upper-triangle bit tuple over every one of the n! orders."""
    return min(upper_bits(g, order) for order in itertools.permutations(range(g.n)))


def all_matchings(g: Graph):
    edges = list(g.edges())
    for r in range(len(edges) + 1):
        for subset in itertools.combinations(edges, r):
            touched = [v for e in subset for v in e]
            if len(touched) == len(set(touched)):
                yield subset


def count_perfect_matchings(g: Graph) -> int:
    return sum(1 for m in all_matchings(g) if 2 * len(m) == g.n)


def count_almost_perfect_matchings(g: Graph) -> int:
    return sum(1 for m in all_matchings(g) if 2 * len(m) == g.n - 1)


def subset_alpha(g: Graph) -> int:
    """alpha by scanning all 2^n vertex subsets."""
    best = 0
    for mask in range(1 << g.n):
        members = [v for v in range(g.n) if mask >> v & 1]
        if len(members) > best and all(not g.has_edge(u, v) for u, v in itertools.combinations(members, 2)):
            best = len(members)
    return best
