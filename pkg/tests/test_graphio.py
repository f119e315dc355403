import pytest
from hypothesis import given

from domcrit.graph import Graph, complete_graph, cycle_graph, path_graph
from domcrit.graphio import (
    GraphParseError,
    from_edgelist,
    from_graph6,
    to_edgelist,
    to_graph6,
)

from .helpers import graphs


class TestGraph6:
    def test_k4_decodes(self):
        # 'C' encodes order 4, '~' all six upper-triangle bits set
        assert from_graph6("C~") == complete_graph(4)

    def test_trivial_orders(self):
        assert to_graph6(Graph(0)) == "?"
        assert to_graph6(Graph(1)) == "@"
        assert from_graph6("?").n == 0
        assert from_graph6("@").n == 1

    @given(graphs(max_n=12))
    def test_roundtrip(self, g):
        assert from_graph6(to_graph6(g)) == g

    def test_roundtrip_long_order(self):
        g = path_graph(63)
        assert from_graph6(to_graph6(g)) == g
        g = cycle_graph(64)
        s = to_graph6(g)
        assert s.startswith("~")
        assert from_graph6(s) == g

    @given(graphs(max_n=10))
    def test_serialize_parse_serialize_identity(self, g):
        s = to_graph6(g)
        assert to_graph6(from_graph6(s)) == s

    def test_header_prefix_tolerated(self):
        assert from_graph6(">>graph6<<C~") == complete_graph(4)

    def test_malformed(self):
        with pytest.raises(GraphParseError):
            from_graph6("")
        with pytest.raises(GraphParseError):
            from_graph6("C")  # truncated body
        with pytest.raises(GraphParseError):
            from_graph6("C~~")  # overlong body
        with pytest.raises(GraphParseError):
            from_graph6("C\x1f")  # character below 63
        with pytest.raises(GraphParseError):
            from_graph6("~~A??")  # unsupported giant-order form

    def test_nonzero_padding_rejected(self):
        # order 3 uses 3 bits; the low padding bits must be zero
        with pytest.raises(GraphParseError):
            from_graph6("B" + chr(63 + 1))


class TestEdgeList:
    def test_p3(self):
        g = from_edgelist("n 3\n0 1\n1 2\n")
        assert g == path_graph(3)

    def test_comments_and_blanks(self):
        g = from_edgelist("# a path\nn 3\n\n0 1  # first\n1 2\n")
        assert g == path_graph(3)

    def test_duplicates_merge(self):
        g = from_edgelist("n 2\n0 1\n1 0\n0 1\n")
        assert g.edge_count() == 1

    def test_roundtrip(self):
        g = cycle_graph(5)
        assert from_edgelist(to_edgelist(g)) == g

    def test_errors(self):
        with pytest.raises(GraphParseError):
            from_edgelist("")
        with pytest.raises(GraphParseError):
            from_edgelist("m 3\n0 1\n")
        with pytest.raises(GraphParseError):
            from_edgelist("n 3\n0 3\n")
        with pytest.raises(GraphParseError):
            from_edgelist("n 3\n1 1\n")
        with pytest.raises(GraphParseError):
            from_edgelist("n 3\n0 1 2\n")
