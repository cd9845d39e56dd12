"""Maximum matching in general graphs and the predicates built on it."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, SizeLimitError, remove_edge, remove_vertex

MAX_BRUTE_FORCE_VERTICES = 16


@dataclass(frozen=True)
class Matching:
    """Pairwise vertex-disjoint edges, each stored as ``(u, v)`` with ``u < v``."""

    edges: frozenset[tuple[int, int]]

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def saturated(self) -> frozenset[int]:
        return frozenset(v for e in self.edges for v in e)

    def mate(self, v: int) -> int | None:
        for a, b in self.edges:
            if a == v:
                return b
            if b == v:
                return a
        return None

    def check(self, g: Graph) -> None:
        """Raise ``ValueError`` unless this is a matching of ``g``."""
        seen: set[int] = set()
        for u, v in self.edges:
            if not (u < v and 0 <= u and v < g.n and g.has_edge(u, v)):
                raise ValueError(f"({u}, {v}) is not an edge of the host graph")
            if u in seen or v in seen:
                raise ValueError(f"edge ({u}, {v}) shares a vertex with another edge")
            seen.update((u, v))


def mate_array(nbrs: Sequence[Sequence[int]]) -> list[int]:
    """Edmonds' blossom algorithm on adjacency lists.

    Returns ``mate[v]`` (or -1).  One alternating-tree search per exposed
    root; odd cycles are contracted by redirecting ``base`` pointers.
    O(n^3) overall.
    """
    n = len(nbrs)
    mate = [-1] * n
    # greedy start; the searches below only ever enlarge it
    for v in range(n):
        if mate[v] == -1:
            for u in nbrs[v]:
                if mate[u] == -1:
                    mate[v], mate[u] = u, v
                    break

    parent = [-1] * n
    base = list(range(n))
    outer = [False] * n

    def lowest_common_base(a: int, b: int) -> int:
        on_path = [False] * n
        while True:
            a = base[a]
            on_path[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if on_path[b]:
                return b
            b = parent[mate[b]]

    def mark_blossom(v: int, stem: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != stem:
            in_blossom[base[v]] = in_blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    def search(root: int) -> int:
        for i in range(n):
            parent[i] = -1
            base[i] = i
            outer[i] = False
        outer[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in nbrs[v]:
                if base[v] == base[u] or mate[v] == u:
                    continue
                if u == root or (mate[u] != -1 and parent[mate[u]] != -1):
                    stem = lowest_common_base(v, u)
                    in_blossom = [False] * n
                    mark_blossom(v, stem, u, in_blossom)
                    mark_blossom(u, stem, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = stem
                            if not outer[i]:
                                outer[i] = True
                                queue.append(i)
                elif parent[u] == -1:
                    parent[u] = v
                    if mate[u] == -1:
                        return u
                    outer[mate[u]] = True
                    queue.append(mate[u])
        return -1

    for root in range(n):
        if mate[root] != -1 or not nbrs[root]:
            continue
        end = search(root)
        while end != -1:
            prev = parent[end]
            nxt = mate[prev]
            mate[end], mate[prev] = prev, end
            end = nxt
    return mate


def maximum_matching(g: Graph) -> Matching:
    mate = mate_array(g.neighbor_lists())
    return Matching(frozenset((v, u) for v, u in enumerate(mate) if v < u))


def matching_number(g: Graph) -> int:
    return sum(1 for v, u in enumerate(mate_array(g.neighbor_lists())) if v < u)


def brute_force_mu(g: Graph) -> int:
    """Exhaustive matching number: the lowest free vertex is either left
    unmatched or paired with each free neighbour in turn.  Test oracle only."""
    if g.n > MAX_BRUTE_FORCE_VERTICES:
        raise SizeLimitError(f"brute-force matching supports n <= {MAX_BRUTE_FORCE_VERTICES}")
    adj = g.adj

    def best(free: int) -> int:
        if not free:
            return 0
        low = free & -free
        v = low.bit_length() - 1
        rest = free ^ low
        result = best(rest)
        partners = adj[v] & rest
        while partners:
            bit = partners & -partners
            result = max(result, 1 + best(rest ^ bit))
            partners ^= bit
        return result

    return best((1 << g.n) - 1)


def has_perfect_matching(g: Graph) -> bool:
    """True iff ``2*mu == n``; the empty graph counts as perfectly matched."""
    return g.n % 2 == 0 and 2 * matching_number(g) == g.n


def has_almost_perfect_matching(g: Graph) -> bool:
    return g.n % 2 == 1 and 2 * matching_number(g) == g.n - 1


def has_unique_perfect_matching(g: Graph) -> bool:
    """A second perfect matching must miss some edge of the first, so it
    suffices to delete each edge of one perfect matching in turn."""
    if not has_perfect_matching(g):
        return False
    return not any(has_perfect_matching(remove_edge(g, u, v)) for u, v in maximum_matching(g).edges)


def has_unique_almost_perfect_matching(g: Graph) -> bool:
    if g.n % 2 == 0:
        return False
    found = None
    for v in range(g.n):
        if has_perfect_matching(remove_vertex(g, v)):
            if found is not None:
                return False
            found = v
    return found is not None and has_unique_perfect_matching(remove_vertex(g, found))
