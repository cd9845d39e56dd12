"""Canonical labelling by permutation minimum, and exhaustive enumeration."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .graph import Graph, SizeLimitError
from .graph6 import write_graph6

MAX_CANONICAL_VERTICES = 8
MAX_DEDUP_VERTICES = 7
MAX_LABELED_VERTICES = 7


def canonical_labeling(g: Graph) -> tuple[int, ...]:
    """Vertex order whose upper-triangle bit string is lexicographically least.

    Positions are filled one at a time; position ``j`` fixes column ``j`` of
    the bit string, so a branch is pruned as soon as its prefix exceeds the
    best complete string seen.  This returns the exact minimum over all
    ``n!`` orders without enumerating all of them.
    """
    n = g.n
    if n > MAX_CANONICAL_VERTICES:
        raise SizeLimitError(f"canonical form supports n <= {MAX_CANONICAL_VERTICES}, got {n}")
    adj = g.adj
    best_cols: list[int] | None = None
    best_order: tuple[int, ...] = tuple(range(n))
    order: list[int] = []
    cols: list[int] = []

    def column(w: int) -> int:
        # row 0 is the most significant bit of the column
        c = 0
        for v in order:
            c = c << 1 | (adj[v] >> w & 1)
        return c

    def extend(used: int) -> None:
        nonlocal best_cols, best_order
        j = len(order)
        if j == n:
            if best_cols is None or cols < best_cols:
                best_cols = cols.copy()
                best_order = tuple(order)
            return
        options = sorted((column(w), w) for w in range(n) if not used >> w & 1)
        for c, w in options:
            cols.append(c)
            if best_cols is not None and cols > best_cols[: j + 1]:
                cols.pop()
                break
            order.append(w)
            extend(used | 1 << w)
            order.pop()
            cols.pop()

    extend(0)
    return best_order


def canonical_graph(g: Graph) -> Graph:
    order = canonical_labeling(g)
    perm = [0] * g.n
    for position, v in enumerate(order):
        perm[v] = position
    adj = [0] * g.n
    for v in range(g.n):
        mask = 0
        rest = g.adj[v]
        while rest:
            low = rest & -rest
            mask |= 1 << perm[low.bit_length() - 1]
            rest ^= low
        adj[perm[v]] = mask
    return Graph(g.n, tuple(adj))


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-invariant key: graph6 of the least-bit-string relabelling.

    For a fixed vertex count the graph6 bytes order exactly like the bit
    strings they pack, so the key is that minimum itself.
    """
    return write_graph6(canonical_graph(g)).encode("ascii")


def _labeled(n: int) -> Iterator[Graph]:
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    total = len(pairs)
    for code in range(1 << total):
        adj = [0] * n
        for k, (i, j) in enumerate(pairs):
            if code >> (total - 1 - k) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        yield Graph(n, tuple(adj))


@lru_cache(maxsize=None)
def _dedup(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph(0, ()),)
    found: dict[bytes, Graph] = {}
    for smaller in _dedup(n - 1):
        for attach in range(1 << (n - 1)):
            adj = list(smaller.adj)
            for v in range(n - 1):
                if attach >> v & 1:
                    adj[v] |= 1 << (n - 1)
            candidate = Graph(n, tuple(adj) + (attach,))
            canon = canonical_graph(candidate)
            key = write_graph6(canon).encode("ascii")
            found.setdefault(key, canon)
    return tuple(found[key] for key in sorted(found))


def enumerate_graphs(n: int, dedup: bool = False) -> Iterator[Graph]:
    """All graphs on ``n`` vertices in ascending bit-string order.

    With ``dedup`` one canonical representative per isomorphism class is
    produced instead of every labelled graph.
    """
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    if dedup:
        if n > MAX_DEDUP_VERTICES:
            raise SizeLimitError(f"deduplicated enumeration supports n <= {MAX_DEDUP_VERTICES}")
        yield from _dedup(n)
    else:
        if n > MAX_LABELED_VERTICES:
            raise SizeLimitError(f"labelled enumeration supports n <= {MAX_LABELED_VERTICES}")
        yield from _labeled(n)
