"""Corona graphs ``H o (X_1, ..., X_n)`` and their closed-form invariants.

Every formula here works on the head and on each satellite separately;
nothing below builds the corona except :func:`build_corona` itself.

A ``K0`` family member leaves its head vertex *bare* (no satellites).  A bare
vertex is not dominated by a private independent set, so the independence
sum picks up ``alpha(H[bare])``; with no bare positions this term is zero and
the sum is the familiar one.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

from .graph import Graph, apex_join, complete, induced_subgraph
from .graph6 import content_lines, format_token, parse_token
from .independence import independence_number
from .matching import (
    has_unique_almost_perfect_matching,
    has_unique_perfect_matching,
    matching_number,
)


@dataclass(frozen=True)
class CoronaSpec:
    head: Graph
    family: tuple[Graph, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", tuple(self.family))
        if len(self.family) != self.head.n:
            raise ValueError(
                f"family has {len(self.family)} members but the head has {self.head.n} vertices"
            )

    @property
    def order(self) -> int:
        """Vertex count of the corona."""
        return self.head.n + sum(x.n for x in self.family)

    @property
    def bare(self) -> frozenset[int]:
        return frozenset(i for i, x in enumerate(self.family) if x.n == 0)

    def tokens(self) -> list[str]:
        return [format_token(self.head)] + [format_token(x) for x in self.family]


class Origin(NamedTuple):
    """Where a corona vertex came from: head vertex ``owner`` when ``member``
    is None, otherwise vertex ``member`` of satellite ``owner``."""

    owner: int
    member: int | None = None


@dataclass(frozen=True)
class CoronaGraph:
    spec: CoronaSpec
    graph: Graph
    provenance: tuple[Origin, ...]
    offsets: tuple[int, ...]

    def satellite_vertex(self, i: int, j: int) -> int:
        return self.offsets[i] + j


def uniform_corona(head: Graph, x: Graph) -> CoronaSpec:
    return CoronaSpec(head, (x,) * head.n)


def clique_corona(head: Graph, sizes: int | Sequence[int]) -> CoronaSpec:
    if isinstance(sizes, int):
        sizes = [sizes] * head.n
    return CoronaSpec(head, tuple(complete(q) for q in sizes))


def build_corona(spec: CoronaSpec) -> CoronaGraph:
    """Head vertices come first, then each satellite block in family order."""
    h = spec.head.n
    adj = list(spec.head.adj)
    provenance = [Origin(i) for i in range(h)]
    offsets = []
    start = h
    for i, x in enumerate(spec.family):
        offsets.append(start)
        block = ((1 << x.n) - 1) << start
        adj[i] |= block
        for j, mask in enumerate(x.adj):
            adj.append(mask << start | 1 << i)
            provenance.append(Origin(i, j))
        start += x.n
    return CoronaGraph(spec, Graph(start, tuple(adj)), tuple(provenance), tuple(offsets))


class ComponentFacts(NamedTuple):
    n: int
    alpha: int
    mu: int
    has_pm: bool
    has_apm: bool

    @property
    def kappa(self) -> int:
        return self.n - self.alpha - self.mu

    @property
    def is_ke(self) -> bool:
        return self.kappa == 0

    @property
    def is_1ke(self) -> bool:
        return self.kappa == 1


@lru_cache(maxsize=8192)
def component_facts(x: Graph) -> ComponentFacts:
    mu = matching_number(x)
    return ComponentFacts(
        n=x.n,
        alpha=independence_number(x),
        mu=mu,
        has_pm=2 * mu == x.n,
        has_apm=x.n % 2 == 1 and 2 * mu == x.n - 1,
    )


@lru_cache(maxsize=8192)
def has_unique_apm(x: Graph) -> bool:
    return has_unique_almost_perfect_matching(x)


@lru_cache(maxsize=8192)
def has_unique_pm(x: Graph) -> bool:
    return has_unique_perfect_matching(x)


def f_set(spec: CoronaSpec, check: bool = False) -> frozenset[int]:
    """Head positions whose satellite gains nothing from its apex, i.e. whose
    satellite has a perfect matching (K0 included).

    With ``check`` the defining equality ``mu(X_i) == mu(v_i o X_i)`` is
    evaluated as well and any disagreement raises ``AssertionError``.
    """
    result = frozenset(i for i, x in enumerate(spec.family) if component_facts(x).has_pm)
    if check:
        direct = frozenset(
            i for i, x in enumerate(spec.family) if matching_number(x) == matching_number(apex_join(x))
        )
        if direct != result:
            raise AssertionError(f"F by perfect matchings {sorted(result)} != F by definition {sorted(direct)}")
    return result


def head_on(spec: CoronaSpec, positions: Iterable[int]) -> Graph:
    return induced_subgraph(spec.head, positions)


def fast_alpha(spec: CoronaSpec) -> int:
    total = sum(component_facts(x).alpha for x in spec.family)
    bare = spec.bare
    if bare:
        total += independence_number(head_on(spec, bare))
    return total


def fast_mu(spec: CoronaSpec) -> int:
    f = f_set(spec)
    return (
        matching_number(head_on(spec, f))
        + sum(component_facts(x).mu for x in spec.family)
        + spec.head.n
        - len(f)
    )


def fast_kappa(spec: CoronaSpec) -> int:
    return spec.order - fast_alpha(spec) - fast_mu(spec)


def head_deficiency(spec: CoronaSpec) -> int:
    """``|F| - mu(H[F]) - alpha(H[bare])``: the share of the corona's
    deficiency that comes from the head rather than from the satellites.

    ``kappa(corona) = sum(kappa(X_i)) + head_deficiency``; it is always
    non-negative and, with no bare positions, is zero exactly when F is empty.
    """
    f = f_set(spec)
    value = len(f) - matching_number(head_on(spec, f))
    bare = spec.bare
    if bare:
        value -= independence_number(head_on(spec, bare))
    return value


# -- text formats -----------------------------------------------------------

def read_corona_spec(text: str) -> CoronaSpec:
    """Head token on the first content line, then one family token per head
    vertex.  ``#`` starts a comment line; ``K0`` is the empty graph."""
    lines = content_lines(text)
    if not lines:
        raise ValueError("corona spec is empty")
    head = parse_token(lines[0])
    family = lines[1:]
    if len(family) != head.n:
        raise ValueError(f"head has {head.n} vertices but {len(family)} family lines follow")
    return CoronaSpec(head, tuple(parse_token(tok) for tok in family))


def format_corona_spec(spec: CoronaSpec) -> str:
    return "\n".join(spec.tokens()) + "\n"


def to_dot(corona: CoronaGraph) -> str:
    lines = ["graph corona {"]
    for v, origin in enumerate(corona.provenance):
        label = f"v{origin.owner}" if origin.member is None else f"u{origin.owner}_{origin.member}"
        lines.append(f'  {v} [label="{label}"];')
    g = corona.graph
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
