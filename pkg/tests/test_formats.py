"""Tests for graph6 and edge-list reading and writing."""

import networkx as nx
import pytest

from src.cli.formats import (
    EdgeListError,
    Graph6CharacterError,
    Graph6Error,
    Graph6TrailingDataError,
    Graph6TruncatedError,
    encode_edge_list,
    encode_graph6,
    parse_edge_list,
    parse_graph6,
)
from src.families import complete, path
from src.graphs import Graph


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


class TestGraph6:
    """Test the graph6 codec."""

    @pytest.mark.parametrize(
        "text,n,edges",
        [
            ("A?", 2, ()),
            ("A_", 2, ((0, 1),)),
            ("Bw", 3, ((0, 1), (0, 2), (1, 2))),
            (">>graph6<<Bw\n", 3, ((0, 1), (0, 2), (1, 2))),
        ],
    )
    def test_decode_small_graphs(self, text, n, edges):
        """Test known strings, with and without header."""
        g = parse_graph6(text)
        assert g.n == n
        assert g.edges == edges

    def test_encode_matches_networkx(self, named_graphs):
        """Test encoding against networkx on the named corpus."""
        for name, g in named_graphs:
            expected = nx.to_graph6_bytes(to_networkx(g), header=False).decode("ascii").strip()
            assert encode_graph6(g) == expected, name

    def test_round_trip(self, named_graphs):
        """Test decode(encode(g)) == g."""
        for name, g in named_graphs:
            assert parse_graph6(encode_graph6(g)) == g, name

    def test_medium_size_field(self):
        """Test n = 63 switches to the four-character size field."""
        g = path(63)
        text = encode_graph6(g)
        assert text.startswith("~??~")
        assert parse_graph6(text) == g

    @pytest.mark.parametrize(
        "text,error",
        [
            ("", Graph6TruncatedError),
            ("B", Graph6TruncatedError),
            ("~?", Graph6TruncatedError),
            ("Bw?", Graph6TrailingDataError),
            ("A`", Graph6TrailingDataError),
            ("A ?", Graph6CharacterError),
            ("B\x7f", Graph6CharacterError),
        ],
    )
    def test_malformed(self, text, error):
        """Test each failure kind."""
        with pytest.raises(error):
            parse_graph6(text)

    def test_errors_are_value_errors(self):
        """Test the common base class."""
        assert issubclass(Graph6TruncatedError, Graph6Error)
        assert issubclass(Graph6Error, ValueError)


class TestEdgeList:
    """Test the edge-list reader and writer."""

    def test_header_and_comments(self):
        """Test header, blank lines and comments."""
        g = parse_edge_list("# square with a pendant\nn 5\n\n0 1\n1 2  # middle\n2 3\n3 0\n")
        assert g.n == 5
        assert g.m == 4
        assert g.degree(4) == 0

    def test_vertex_count_defaults_to_max_id(self):
        """Test n = max id + 1 without a header."""
        g = parse_edge_list("2 0\n1 2\n")
        assert g.n == 3
        assert g.edges == ((0, 2), (1, 2))

    def test_round_trip(self, named_graphs):
        """Test the writer output parses back to the same graph."""
        for name, g in named_graphs:
            assert parse_edge_list(encode_edge_list(g)) == g, name

    def test_writer_format(self):
        """Test header line and one edge per line."""
        assert encode_edge_list(complete(3)) == "n 3\n0 1\n0 2\n1 2\n"

    @pytest.mark.parametrize(
        "text,line",
        [
            ("0 1\n2 2\n", 2),
            ("0 1\n1 0\n", 2),
            ("0 x\n", 1),
            ("0 1 2\n", 1),
            ("n 3\n0 1\n1 3\n", 3),
            ("n three\n0 1\n", 1),
            ("# only\n0 -1\n", 2),
            ("0 ²\n", 1),
            ("0 1\n١ 2\n", 2),
            ("n ³\n0 1\n", 1),
        ],
    )
    def test_malformed(self, text, line):
        """Test errors carry the offending line number."""
        with pytest.raises(EdgeListError) as exc_info:
            parse_edge_list(text)
        assert exc_info.value.line == line
        assert str(exc_info.value).startswith(f"line {line}:")
