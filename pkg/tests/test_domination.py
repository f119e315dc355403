import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from domcrit.domination import (
    GammaCache,
    GammaSetBudgetError,
    all_gamma_sets,
    brute_force_gamma,
    domination_number,
    gamma,
    gamma_after_delete,
    is_dominating_set,
)
from domcrit.families import FkParams, build_Fk
from domcrit.graph import (
    Graph,
    complete_graph,
    complement,
    cycle_graph,
    disjoint_union,
    path_graph,
    with_edge,
)
from domcrit.enumeration import random_graph

from .helpers import graphs, oracle_all_gamma_sets, oracle_gamma


class TestIsDominating:
    def test_whole_vertex_set(self):
        g = cycle_graph(5)
        assert is_dominating_set(g, range(5))

    def test_p3(self):
        p3 = path_graph(3)
        assert is_dominating_set(p3, [1])
        assert not is_dominating_set(p3, [0])

    def test_c4_singleton(self):
        assert not is_dominating_set(cycle_graph(4), [0])

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            is_dominating_set(path_graph(2), [5])


class TestGamma:
    def test_complete(self):
        for n in range(1, 8):
            assert gamma(complete_graph(n)) == 1

    def test_cocktail_parties(self):
        for m in range(2, 6):
            g = complement(disjoint_union([complete_graph(2)] * m))
            assert gamma(g) == 2

    def test_p7(self):
        assert oracle_gamma(path_graph(7)) == 3
        assert gamma(path_graph(7)) == 3

    def test_chain_2_2(self):
        g = build_Fk(FkParams(3, (2, 2))).graph
        assert gamma(g) == 3

    def test_empty_graph(self):
        assert gamma(Graph(0)) == 0

    def test_isolated_vertices_mandatory(self):
        assert gamma(Graph(3)) == 3

    def test_witness_is_minimum(self):
        rng = random.Random(31)
        for _ in range(50):
            g = random_graph(rng, rng.randint(1, 8), rng.uniform(0.1, 0.9))
            res = domination_number(g)
            assert is_dominating_set(g, res.witness)
            assert len(res.witness) == res.gamma
            for combo in itertools.combinations(range(g.n), res.gamma - 1):
                assert not is_dominating_set(g, combo)

    @settings(max_examples=80)
    @given(graphs(max_n=8))
    def test_matches_oracle(self, g):
        assert gamma(g) == oracle_gamma(g)
        assert brute_force_gamma(g) == oracle_gamma(g)

    @settings(max_examples=50)
    @given(graphs(max_n=8, min_n=1), st.data())
    def test_single_deletion_bound(self, g, data):
        x = data.draw(st.integers(0, g.n - 1))
        assert gamma_after_delete(g, (x,)) >= gamma(g) - 1

    @settings(max_examples=40)
    @given(graphs(max_n=7, min_n=2), st.data())
    def test_edge_addition_monotone(self, g, data):
        u = data.draw(st.integers(0, g.n - 2))
        v = data.draw(st.integers(u + 1, g.n - 1))
        if not g.has_edge(u, v):
            assert gamma(with_edge(g, u, v)) <= gamma(g)

    @settings(max_examples=40)
    @given(graphs(max_n=6, min_n=1), graphs(max_n=6, min_n=1), st.data())
    def test_coalescence_sandwich(self, h1, h2, data):
        from domcrit.graph import coalesce

        x1 = data.draw(st.integers(0, h1.n - 1))
        x2 = data.draw(st.integers(0, h2.n - 1))
        if h1.degree(x1) == 0 or h2.degree(x2) == 0:
            return
        g1, g2 = gamma(h1), gamma(h2)
        gg = gamma(coalesce(h1, x1, h2, x2).graph)
        assert g1 + g2 - 1 <= gg <= g1 + g2

    def test_component_additivity(self):
        g = disjoint_union([cycle_graph(4), path_graph(7), complete_graph(3)])
        assert gamma(g) == 2 + 3 + 1

    def test_order_cap_boundary(self):
        assert gamma(path_graph(64)) == 22  # ceil(64/3)
        assert gamma(complete_graph(64)) == 1

    def test_dominates_relation(self):
        from domcrit.domination import dominates

        p4 = path_graph(4)
        assert dominates(p4, [1], [0, 1, 2])
        assert not dominates(p4, [1], [3])
        assert is_dominating_set(p4, [1, 2]) == dominates(p4, [1, 2], range(4))

    def test_cache_consistency(self):
        cache = GammaCache()
        rng = random.Random(13)
        for _ in range(30):
            g = random_graph(rng, rng.randint(0, 7), 0.5)
            assert gamma(g, cache=cache) == gamma(g)
        assert len(cache) > 0


class TestAllGammaSets:
    def test_k3(self):
        assert all_gamma_sets(complete_graph(3)) == ((0,), (1,), (2,))

    def test_p3(self):
        assert all_gamma_sets(path_graph(3)) == ((1,),)

    def test_c4_count(self):
        expected = oracle_all_gamma_sets(cycle_graph(4))
        got = all_gamma_sets(cycle_graph(4))
        assert list(got) == expected
        assert len(got) == 6

    @settings(max_examples=60)
    @given(graphs(max_n=7))
    def test_matches_oracle(self, g):
        assert list(all_gamma_sets(g)) == oracle_all_gamma_sets(g)

    @given(graphs(max_n=7))
    def test_every_set_dominates_at_size_gamma(self, g):
        k = gamma(g)
        for s in all_gamma_sets(g):
            assert len(s) == k
            assert is_dominating_set(g, s)

    def test_budget_refusal(self):
        g = cycle_graph(12)
        with pytest.raises(GammaSetBudgetError):
            all_gamma_sets(g, budget=3)

    def test_domination_number_can_attach_all_sets(self):
        res = domination_number(cycle_graph(4), include_all_sets=True)
        assert res.all_min_sets is not None
        assert len(res.all_min_sets) == 6
        assert res.witness in res.all_min_sets
        assert domination_number(cycle_graph(4)).all_min_sets is None

    def test_budget_env(self, monkeypatch):
        monkeypatch.setenv("DOMCRIT_GAMMA_BUDGET", "1")
        with pytest.raises(GammaSetBudgetError):
            all_gamma_sets(cycle_graph(8))


class TestGammaAfterDelete:
    def test_empty_deletion(self):
        g = cycle_graph(5)
        assert gamma_after_delete(g, ()) == gamma(g)

    def test_c4_minus_vertex(self):
        assert gamma_after_delete(cycle_graph(4), (0,)) == 1

    def test_chain_minus_cut(self):
        inst = build_Fk(FkParams(3, (2, 2)))
        cut = inst.cut_vertices[0]
        assert gamma_after_delete(inst.graph, (cut,)) == 2
