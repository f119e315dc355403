import random

import pytest

from domcrit.enumeration import (
    count_graphs,
    graphs_of_order,
    graphs_up_to,
    random_connected_graph,
    random_graph,
)
from domcrit.graph import is_connected
from domcrit.iso import are_isomorphic, canonical_key

from .helpers import burnside_graph_count, inverse_euler_transform


def test_counts_match_burnside_oracle():
    # cycle-index counting is entirely independent of the canonical kernel
    for n in range(8):
        assert count_graphs(n) == burnside_graph_count(n)


def test_known_counts():
    assert [count_graphs(n) for n in range(1, 8)] == [1, 2, 4, 11, 34, 156, 1044]


def test_connected_counts_match_euler_inversion():
    totals = [count_graphs(n) for n in range(8)]
    connected = inverse_euler_transform(totals)
    for n in range(1, 8):
        assert sum(1 for _ in graphs_of_order(n, connected_only=True)) == connected[n]


def test_representatives_are_canonical_and_distinct():
    seen = set()
    for g in graphs_of_order(5):
        key = canonical_key(g)
        assert key not in seen
        seen.add(key)
    assert len(seen) == 34


def test_representatives_pairwise_nonisomorphic_spotcheck():
    gs = list(graphs_of_order(5))
    rng = random.Random(3)
    for _ in range(40):
        a, b = rng.sample(range(len(gs)), 2)
        assert not are_isomorphic(gs[a], gs[b])


def test_deterministic_order():
    first = [g.adj for g in graphs_up_to(5)]
    second = [g.adj for g in graphs_up_to(5)]
    assert first == second


def test_order_cap():
    with pytest.raises(ValueError):
        count_graphs(11)


def test_random_samplers_deterministic():
    a = random_graph(random.Random(5), 7, 0.4)
    b = random_graph(random.Random(5), 7, 0.4)
    assert a == b
    c = random_connected_graph(random.Random(6), 6, 0.4)
    d = random_connected_graph(random.Random(6), 6, 0.4)
    assert c == d and is_connected(c)
