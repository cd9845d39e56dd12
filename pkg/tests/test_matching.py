import random

import pytest

from coronake.graph import EMPTY, Graph, apex_join, complete, cycle, edgeless, path, remove_vertex
from coronake.iso import enumerate_graphs
from coronake.matching import (
    Matching,
    brute_force_mu,
    has_almost_perfect_matching,
    has_perfect_matching,
    has_unique_almost_perfect_matching,
    has_unique_perfect_matching,
    matching_number,
    maximum_matching,
)

from helpers import count_almost_perfect_matchings, count_perfect_matchings, random_graph, union


def has_augmenting_path(g: Graph, m: Matching) -> bool:
    """Depth-first search over simple alternating paths between free vertices."""
    mate = {}
    for u, v in m.edges:
        mate[u], mate[v] = v, u
    free = [v for v in range(g.n) if v not in mate]

    def extend(v, visited, need_matched):
        for u in range(g.n):
            if u in visited or not g.has_edge(v, u):
                continue
            if need_matched:
                if mate.get(v) == u and extend(u, visited | {u}, False):
                    return True
            elif mate.get(v) != u:
                if u not in mate:
                    return True
                if extend(u, visited | {u}, True):
                    return True
        return False

    return any(extend(s, {s}, False) for s in free)


def test_examples():
    assert len(maximum_matching(EMPTY)) == 0
    assert matching_number(cycle(4)) == 2
    for n, mu in [(4, 2), (5, 2), (7, 3), (9, 4)]:
        assert matching_number(complete(n)) == mu == brute_force_mu(complete(n))


def test_brute_force_examples():
    two_k2 = union(complete(2), complete(2))
    assert brute_force_mu(two_k2) == 2
    assert brute_force_mu(path(4)) == 2
    assert brute_force_mu(apex_join(two_k2)) == 2


def test_result_is_a_valid_matching_without_augmenting_path():
    rng = random.Random(3)
    for _ in range(150):
        g = random_graph(rng, rng.randint(0, 9))
        m = maximum_matching(g)
        m.check(g)
        assert len(m.saturated) == 2 * len(m)
        assert not has_augmenting_path(g, m)


def test_matching_check_rejects_bad_edges():
    with pytest.raises(ValueError):
        Matching(frozenset({(0, 1), (1, 2)})).check(path(3))
    with pytest.raises(ValueError):
        Matching(frozenset({(0, 2)})).check(path(3))


def test_blossom_cases():
    # odd cycles with pendant paths force contractions
    petersen = Graph.from_edges(
        10,
        [(i, (i + 1) % 5) for i in range(5)]
        + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        + [(i, i + 5) for i in range(5)],
    )
    assert matching_number(petersen) == 5
    flower = Graph.from_edges(8, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3), (5, 6), (6, 7)])
    assert matching_number(flower) == brute_force_mu(flower) == 4


def test_complete_graphs():
    for n in range(11):
        assert matching_number(complete(n)) == n // 2


def test_brute_force_agrees_on_random_dense_graphs():
    rng = random.Random(4)
    for _ in range(60):
        g = random_graph(rng, rng.randint(7, 12))
        assert matching_number(g) == brute_force_mu(g)


@pytest.mark.parametrize(
    "g, perfect, almost",
    [
        (EMPTY, True, False),
        (complete(1), False, True),
        (complete(2), True, False),
        (complete(3), False, True),
        (cycle(4), True, False),
        (edgeless(3), False, False),
    ],
)
def test_perfect_and_almost_perfect(g, perfect, almost):
    assert has_perfect_matching(g) is perfect
    assert has_almost_perfect_matching(g) is almost


@pytest.mark.parametrize(
    "g, expected",
    [(complete(2), True), (cycle(4), False), (path(4), True), (EMPTY, True), (complete(3), False)],
)
def test_unique_perfect_matching_examples(g, expected):
    assert has_unique_perfect_matching(g) is expected
    assert (count_perfect_matchings(g) == 1) is expected


@pytest.mark.parametrize(
    "g, expected",
    [(complete(1), True), (complete(3), False), (union(complete(2), complete(1)), True), (path(3), False)],
)
def test_unique_almost_perfect_matching_examples(g, expected):
    assert has_unique_almost_perfect_matching(g) is expected
    assert (count_almost_perfect_matchings(g) == 1) is expected


def _structural_unique_apm(g: Graph) -> bool:
    """g is K1 plus a graph with a unique perfect matching."""
    return any(g.degree(v) == 0 and count_perfect_matchings(remove_vertex(g, v)) == 1 for v in range(g.n))


@pytest.mark.parametrize("n, dedup", [(n, False) for n in range(6)] + [(6, True)])
def test_predicates_against_enumeration(n, dedup):
    for g in enumerate_graphs(n, dedup=dedup):
        pm = count_perfect_matchings(g)
        apm = count_almost_perfect_matchings(g)
        assert has_perfect_matching(g) is (pm > 0)
        assert has_almost_perfect_matching(g) is (n % 2 == 1 and apm > 0)
        assert has_unique_perfect_matching(g) is (pm == 1)
        assert has_unique_almost_perfect_matching(g) is (apm == 1) is _structural_unique_apm(g)


def test_apex_gain_is_zero_exactly_with_perfect_matching():
    for n in range(7):
        for g in enumerate_graphs(n, dedup=True):
            gain = matching_number(apex_join(g)) - matching_number(g)
            assert gain in (0, 1)
            assert (gain == 0) is has_perfect_matching(g)
