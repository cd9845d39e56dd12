"""Immutable simple graphs on dense vertex indices ``0..n-1``.

Adjacency is stored as one integer bitmask per vertex, which keeps
membership tests O(1) and makes the small exhaustive searches elsewhere in
the package cheap.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import AbstractSet, Iterable, Iterator


class SizeLimitError(ValueError):
    """Raised when an exact or exhaustive routine is asked to exceed its bound."""


@dataclass(frozen=True)
class Graph:
    """A finite, undirected, loopless graph without multiple edges.

    ``adj[v]`` is the bitmask of neighbours of ``v``.  Instances are hashable
    and compare equal only when the labelled graphs coincide.
    """

    n: int
    adj: tuple[int, ...]
    m: int = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"vertex count must be non-negative, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        degree_sum = 0
        for v, mask in enumerate(self.adj):
            if mask & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if mask >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            rest = mask
            while rest:
                low = rest & -rest
                u = low.bit_length() - 1
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
                rest ^= low
            degree_sum += mask.bit_count()
        object.__setattr__(self, "m", degree_sum // 2)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as ``(u, v)`` with ``u < v``, sorted."""
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1)):
                yield u, u + 1 + v

    def neighbor_lists(self) -> list[list[int]]:
        return [list(iter_bits(mask)) for mask in self.adj]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


def popcount(x: int) -> int:
    return x.bit_count()


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(g: Graph, vertices: AbstractSet[int] | Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
        mask |= 1 << v
    return mask


# -- constructors -----------------------------------------------------------

def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)] + [(n - 1, 0)])


def edgeless(n: int) -> Graph:
    return Graph(n, (0,) * n)


_KINDS = {"complete": complete, "path": path, "cycle": cycle, "edgeless": edgeless}


def make(kind: str, n: int) -> Graph:
    """Build one of the standard labelled graphs ``complete``, ``path``,
    ``cycle`` or ``edgeless`` on ``n`` vertices."""
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    try:
        builder = _KINDS[kind]
    except KeyError:
        raise ValueError(f"unknown graph kind {kind!r}; expected one of {sorted(_KINDS)}") from None
    return builder(n)


EMPTY = edgeless(0)


# -- operations -------------------------------------------------------------

def disjoint_union(a: Graph, b: Graph) -> Graph:
    """Place ``b`` after ``a``; vertices of ``b`` are shifted by ``a.n``."""
    return Graph(a.n + b.n, a.adj + tuple(mask << a.n for mask in b.adj))


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph induced by ``s``, relabelled ``0..|s|-1`` in ascending order."""
    members = sorted(set(s))
    for v in members:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    index = {v: i for i, v in enumerate(members)}
    adj = []
    for v in members:
        mask = 0
        for u in iter_bits(g.adj[v]):
            if u in index:
                mask |= 1 << index[u]
        adj.append(mask)
    return Graph(len(members), tuple(adj))


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(g.n, tuple(adj))


def remove_vertex(g: Graph, v: int) -> Graph:
    return induced_subgraph(g, (u for u in range(g.n) if u != v))


def neighbors(g: Graph, v: int) -> frozenset[int]:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range for n={g.n}")
    return frozenset(iter_bits(g.adj[v]))


def neighborhood(g: Graph, a: Iterable[int]) -> frozenset[int]:
    """All vertices with at least one neighbour in ``a``; may intersect ``a``."""
    mask = 0
    for v in iter_bits(to_mask(g, a)):
        mask |= g.adj[v]
    return frozenset(iter_bits(mask))


def apex_join(x: Graph) -> Graph:
    """Add vertex ``x.n`` adjacent to every vertex of ``x``."""
    apex = x.n
    full = (1 << apex) - 1
    return Graph(apex + 1, tuple(mask | 1 << apex for mask in x.adj) + (full,))


def relabel(g: Graph, perm: list[int] | tuple[int, ...]) -> Graph:
    """Return the graph with vertex ``v`` renamed ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm must be a permutation of 0..n-1")
    adj = [0] * g.n
    for v in range(g.n):
        mask = 0
        for u in iter_bits(g.adj[v]):
            mask |= 1 << perm[u]
        adj[perm[v]] = mask
    return Graph(g.n, tuple(adj))


def is_connected(g: Graph) -> bool:
    """K0 counts as connected."""
    if g.n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def is_bipartite(g: Graph) -> bool:
    side = [-1] * g.n
    for start in range(g.n):
        if side[start] != -1:
            continue
        side[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in iter_bits(g.adj[v]):
                if side[u] == -1:
                    side[u] = 1 - side[v]
                    queue.append(u)
                elif side[u] == side[v]:
                    return False
    return True


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2
