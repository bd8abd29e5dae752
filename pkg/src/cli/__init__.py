"""Command-line surface: graph file formats, reports and the ``drg-verifier`` entry point."""

from .formats import (
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

__all__ = [
    "EdgeListError",
    "Graph6CharacterError",
    "Graph6Error",
    "Graph6TrailingDataError",
    "Graph6TruncatedError",
    "encode_edge_list",
    "encode_graph6",
    "parse_edge_list",
    "parse_graph6",
]
