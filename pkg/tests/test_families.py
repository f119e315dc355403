import pytest

from domcrit.criticality import is_k_critical, is_weak_bicritical
from domcrit.domination import GammaCache, gamma
from domcrit.families import (
    FkParams,
    Fstar2Variant,
    build_Fk,
    build_Fpp3,
    build_Fstar2,
    build_Fstar_k,
    cocktail_party_graph,
    enumerate_Fk,
    enumerate_Fstar_k,
    identifiable_vertices,
    recognize_Fk,
    recognize_Fstar_k,
)
from domcrit.graph import (
    complete_graph,
    complement,
    cycle_graph,
    diameter,
    diametrical_vertices,
    disjoint_union,
    path_graph,
    with_vertex,
)
from domcrit.iso import are_isomorphic, canonical_key


class TestParams:
    def test_validation(self):
        with pytest.raises(ValueError):
            FkParams(1, ())
        with pytest.raises(ValueError):
            FkParams(3, (2,))
        with pytest.raises(ValueError):
            FkParams(3, (2, 1))

    def test_order_formula(self):
        for k, m in [(2, (2,)), (3, (2, 2)), (3, (2, 5)), (4, (2, 3, 2)), (5, (2, 2, 2, 2))]:
            p = FkParams(k, m)
            assert build_Fk(p).graph.n == p.order == 2 * sum(m) - (k - 2)


class TestBuildFk:
    def test_k2_m2_is_c4(self):
        inst = build_Fk(FkParams(2, (2,)))
        assert inst.n == 4
        assert are_isomorphic(inst.graph, cycle_graph(4))

    def test_chain_2_2(self):
        inst = build_Fk(FkParams(3, (2, 2)))
        assert inst.n == 7
        assert gamma(inst.graph) == 3
        assert diameter(inst.graph) == 4
        assert len(inst.cut_vertices) == 1

    def test_endpoints_are_diametrical_nonadjacent_to_cut(self):
        inst = build_Fk(FkParams(4, (2, 3, 2)))
        u1, v_last = inst.endpoints
        diams = diametrical_vertices(inst.graph)
        assert u1 in diams and v_last in diams
        assert not inst.graph.has_edge(u1, inst.cut_vertices[0])

    def test_identifiable_nonempty_and_valid(self):
        for params in [FkParams(2, (3,)), FkParams(3, (2, 3))]:
            inst = build_Fk(params)
            assert inst.identifiable
            diams = set(diametrical_vertices(inst.graph))
            if params.k >= 3:
                assert set(inst.identifiable) <= diams


class TestBuildFstar2:
    def test_matching_all_identifiable(self):
        inst = build_Fstar2(Fstar2Variant.MATCHING, 1)
        assert inst.n == 4
        assert len(inst.identifiable) == 4

    def test_k3_three_nonidentifiable(self):
        for m in (1, 2, 3):
            inst = build_Fstar2(Fstar2Variant.MATCHING_K3, m)
            assert inst.n == 2 * m + 3
            assert inst.n - len(inst.identifiable) == 3

    def test_p3_two_nonidentifiable(self):
        for m in (1, 2, 3):
            inst = build_Fstar2(Fstar2Variant.MATCHING_P3, m)
            assert inst.n == 2 * m + 3
            assert inst.n - len(inst.identifiable) == 2

    def test_all_weak_2_bicritical(self):
        for variant in Fstar2Variant:
            for m in (1, 2):
                inst = build_Fstar2(variant, m)
                assert gamma(inst.graph) == 2
                assert is_weak_bicritical(inst.graph)

    def test_m_validation(self):
        with pytest.raises(ValueError):
            build_Fstar2(Fstar2Variant.MATCHING, 0)


class TestBuildFpp3:
    def test_twin_degree(self):
        for m1, m2 in [(2, 2), (2, 3), (3, 4)]:
            inst = build_Fpp3(m1, m2, 1)
            twin = inst.params["twin"]
            hub = inst.params["hub"]
            assert inst.graph.degree(twin) == 2 * (m1 - 1) + 2 * (m2 - 1)
            assert inst.graph.degree(twin) == len(inst.graph.neighbors(hub)) - 0
            assert not inst.graph.has_edge(hub, twin)

    def test_variant2_adds_hub_edge(self):
        g1 = build_Fpp3(2, 2, 1)
        g2 = build_Fpp3(2, 2, 2)
        assert g2.graph.edge_count() == g1.graph.edge_count() + 1
        assert g2.graph.has_edge(g2.params["hub"], g2.params["twin"])

    def test_weak_3_bicritical_diam4(self):
        inst = build_Fpp3(2, 2, 1)
        assert inst.n == 8
        assert diameter(inst.graph) == 4
        assert gamma(inst.graph) == 3
        assert is_weak_bicritical(inst.graph)

    def test_validation(self):
        with pytest.raises(ValueError):
            build_Fpp3(1, 2, 1)
        with pytest.raises(ValueError):
            build_Fpp3(2, 2, 3)


class TestBuildFstarK:
    def test_glue_c4_onto_k3base(self):
        h1 = build_Fk(FkParams(2, (2,)))
        h2 = build_Fstar2(Fstar2Variant.MATCHING_K3, 1)
        inst = build_Fstar_k(h1, 0, h2, h2.identifiable[0])
        assert inst.k == 3
        assert gamma(inst.graph) == h1.k + h2.k - 1
        assert diameter(inst.graph) == 2 * inst.k - 2
        assert is_weak_bicritical(inst.graph)

    def test_rejects_bad_attachments(self):
        h1 = build_Fk(FkParams(3, (2, 2)))
        h2 = build_Fstar2(Fstar2Variant.MATCHING, 1)
        not_diametrical = next(
            v for v in range(h1.n) if v not in diametrical_vertices(h1.graph)
        )
        with pytest.raises(ValueError):
            build_Fstar_k(h1, not_diametrical, h2, h2.identifiable[0])
        with pytest.raises(ValueError):
            build_Fstar_k(h2, 0, h2, h2.identifiable[0])  # first operand not a chain

    def test_rejects_non_identifiable(self):
        h1 = build_Fk(FkParams(2, (2,)))
        h2 = build_Fstar2(Fstar2Variant.MATCHING_K3, 1)
        bad = next(v for v in range(h2.n) if v not in h2.identifiable)
        with pytest.raises(ValueError):
            build_Fstar_k(h1, 0, h2, bad)


class TestEnumerate:
    def test_fk_2_up_to_6(self):
        got = {canonical_key(i.graph) for i in enumerate_Fk(2, 6)}
        want = {
            canonical_key(cycle_graph(4)),
            canonical_key(complement(disjoint_union([complete_graph(2)] * 3))),
        }
        assert got == want

    def test_fstar_2_up_to_5(self):
        members = enumerate_Fstar_k(2, 5)
        assert len(members) == 3
        assert {i.params["variant"] for i in members} == {
            "matching",
            "matching_k3",
            "matching_p3",
        }

    def test_fk_members_are_k_critical_extremal(self):
        for k in (2, 3, 4):
            for inst in enumerate_Fk(k, 11):
                assert is_k_critical(inst.graph, k)
                assert diameter(inst.graph) == 2 * k - 2

    def test_fstar_members_weak_extremal(self):
        cache = GammaCache()
        for k in (2, 3):
            for inst in enumerate_Fstar_k(k, 9):
                assert gamma(inst.graph, cache=cache) == k
                assert is_weak_bicritical(inst.graph, cache=cache)
                assert diameter(inst.graph) == 2 * k - 2
                assert inst.identifiable

    def test_fk_subset_of_fstar(self):
        fk = {canonical_key(i.graph) for i in enumerate_Fk(3, 9)}
        fstar = {canonical_key(i.graph) for i in enumerate_Fstar_k(3, 9)}
        assert fk <= fstar

    def test_deterministic(self):
        a = [canonical_key(i.graph) for i in enumerate_Fstar_k(3, 9)]
        b = [canonical_key(i.graph) for i in enumerate_Fstar_k(3, 9)]
        assert a == b


class TestRecognizeFk:
    def test_c4(self):
        cert = recognize_Fk(cycle_graph(4))
        assert cert is not None
        assert cert.params == FkParams(2, (2,))

    def test_build_then_recognize(self):
        for k, m in [(2, (4,)), (3, (2, 3)), (3, (3, 2)), (4, (2, 3, 2)), (4, (3, 2, 2))]:
            inst = build_Fk(FkParams(k, m))
            cert = recognize_Fk(inst.graph)
            assert cert is not None
            assert cert.params.m == min(m, tuple(reversed(m)))

    def test_p5_rejected(self):
        assert recognize_Fk(path_graph(5)) is None

    def test_triangle_blocks_rejected(self):
        bowtie = complete_graph(3)
        from domcrit.graph import coalesce

        g = coalesce(bowtie, 0, complete_graph(3), 0).graph
        assert recognize_Fk(g) is None

    def test_cut_adjacency_constraint(self):
        # gluing two cocktail parties at adjacent designated vertices of a
        # middle block must fail; build a 3-block chain whose middle block
        # attaches at adjacent vertices
        from domcrit.graph import coalesce

        b1 = cocktail_party_graph(2)
        b2 = cocktail_party_graph(2)
        b3 = cocktail_party_graph(2)
        step1 = coalesce(b1, 1, b2, 0).graph  # cut at block2 vertex 0
        # attach third block at a vertex adjacent to the first cut: block2's
        # vertex 2 (adjacent to 0) sits at coalesced index 4 + 1 = 5
        step2 = coalesce(step1, 5, b3, 0).graph
        assert recognize_Fk(step2) is None

    def test_endpoints_field(self):
        inst = build_Fk(FkParams(3, (2, 2)))
        cert = recognize_Fk(inst.graph)
        u1, v_last = cert.endpoints
        assert not inst.graph.has_edge(u1, cert.cut_chain[0])
        assert not inst.graph.has_edge(v_last, cert.cut_chain[-1])

    def test_rejects_disconnected(self):
        with pytest.raises(ValueError):
            recognize_Fk(disjoint_union([cycle_graph(4)] * 2))


class TestRecognizeFstar:
    def test_all_built_members_recognized(self):
        for k in (2, 3):
            for inst in enumerate_Fstar_k(k, 9):
                cert = recognize_Fstar_k(inst.graph)
                assert cert is not None and cert.k == k

    def test_all_members_up_to_11_recognized(self):
        from domcrit.domination import GammaCache

        cache = GammaCache()
        total = 0
        for k in (2, 3, 4):
            for inst in enumerate_Fstar_k(k, 11):
                total += 1
                cert = recognize_Fstar_k(inst.graph, cache=cache)
                assert cert is not None and cert.k == k, (k, inst.params)
        assert total > 20

    def test_fpp3_base_case(self):
        for variant in (1, 2):
            cert = recognize_Fstar_k(build_Fpp3(2, 2, variant).graph)
            assert cert is not None and cert.k == 3
            assert cert.variant == variant

    def test_pendant_rejected(self):
        g = with_vertex(cycle_graph(4), (0,))
        assert recognize_Fstar_k(g) is None

    def test_non_members_rejected(self):
        for g in [path_graph(5), cycle_graph(5), complete_graph(4), cycle_graph(6)]:
            assert recognize_Fstar_k(g) is None

    def test_certificate_json_roundtrippable(self):
        import json

        inst = build_Fstar_k(
            build_Fk(FkParams(2, (2,))),
            0,
            build_Fstar2(Fstar2Variant.MATCHING_P3, 1),
            build_Fstar2(Fstar2Variant.MATCHING_P3, 1).identifiable[0],
        )
        cert = recognize_Fstar_k(inst.graph)
        assert cert is not None
        json.dumps(cert.to_json())


class TestIdentifiable:
    def test_rule_switches_at_k3(self):
        g = build_Fk(FkParams(3, (2, 2))).graph
        k2_rule = identifiable_vertices(g, 2)
        k3_rule = identifiable_vertices(g, 3)
        assert set(k3_rule) <= set(k2_rule)
        assert set(k3_rule) <= set(diametrical_vertices(g))

    def test_accepts_instance(self):
        inst = build_Fk(FkParams(3, (2, 2)))
        assert identifiable_vertices(inst) == inst.identifiable
        with pytest.raises(ValueError):
            identifiable_vertices(inst.graph)
