import random

import pytest

from coronake.graph import EMPTY, SizeLimitError, complete, cycle, edgeless, path
from coronake.independence import (
    brute_force_alpha,
    independence_number,
    is_independent,
    maximum_independent_set,
)
from coronake.iso import enumerate_graphs
from coronake.matching import matching_number

from helpers import random_graph, subset_alpha, union


def test_examples():
    assert maximum_independent_set(EMPTY) == frozenset()
    for n in range(1, 8):
        assert independence_number(complete(n)) == 1
    assert independence_number(cycle(4)) == 2 == brute_force_alpha(cycle(4))
    assert independence_number(path(4)) == 2 == brute_force_alpha(path(4))


def test_brute_force_examples():
    assert brute_force_alpha(edgeless(2)) == 2
    assert brute_force_alpha(complete(3)) == 1
    q2p3 = union(edgeless(2), complete(2), complete(2), complete(2))
    assert brute_force_alpha(q2p3) == 5 == independence_number(q2p3)


def test_returned_set_is_independent_and_maximum():
    rng = random.Random(8)
    for _ in range(100):
        g = random_graph(rng, rng.randint(0, 10))
        s = maximum_independent_set(g)
        assert is_independent(g, s)
        assert len(s) == subset_alpha(g)


def test_agrees_with_brute_force_on_small_graphs():
    for n in range(6):
        for g in enumerate_graphs(n):
            assert independence_number(g) == brute_force_alpha(g)


def test_agrees_with_brute_force_on_random_graphs():
    rng = random.Random(9)
    for _ in range(200):
        g = random_graph(rng, rng.randint(7, 16))
        assert independence_number(g) == brute_force_alpha(g)


def test_sandwich_inequality():
    for n in range(7):
        for g in enumerate_graphs(n, dedup=True):
            alpha, mu = independence_number(g), matching_number(g)
            assert alpha + mu <= n <= alpha + 2 * mu


def test_sparse_large_graph_is_solved():
    # 40 vertices, a perfect matching of pendant pairs: alpha is 20
    g = union(*[complete(2)] * 20)
    assert independence_number(g) == 20


def test_bounds():
    with pytest.raises(SizeLimitError):
        independence_number(edgeless(41))
    assert independence_number(edgeless(41), limit=41) == 41
    with pytest.raises(SizeLimitError):
        brute_force_alpha(edgeless(21))
