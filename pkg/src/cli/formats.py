"""graph6 and edge-list readers and writers."""

from typing import List, Optional, Set, Tuple

from ..graphs import Graph

GRAPH6_HEADER = ">>graph6<<"
_SMALL_LIMIT = 62
_MEDIUM_LIMIT = 258047


class Graph6Error(ValueError):
    """Malformed graph6 text."""


class Graph6CharacterError(Graph6Error):
    """Character outside the printable range 63..126."""


class Graph6TruncatedError(Graph6Error):
    """The text ends before all size or adjacency bits are read."""


class Graph6TrailingDataError(Graph6Error):
    """Characters or nonzero padding bits after the adjacency data."""


class EdgeListError(ValueError):
    """Malformed edge list; ``line`` is 1-based."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _sextets(body: str) -> List[int]:
    values = []
    for pos, ch in enumerate(body):
        code = ord(ch)
        if code < 63 or code > 126:
            raise Graph6CharacterError(f"Invalid graph6 character {ch!r} at position {pos}")
        values.append(code - 63)
    return values


def _decode_size(values: List[int]) -> Tuple[int, int]:
    """Return (n, number of sextets used)."""
    if not values:
        raise Graph6TruncatedError("Empty graph6 string")
    if values[0] != 63:
        return values[0], 1
    if len(values) >= 2 and values[1] == 63:
        width = 6
        start = 2
    else:
        width = 3
        start = 1
    if len(values) < start + width:
        raise Graph6TruncatedError("graph6 size field is truncated")
    n = 0
    for v in values[start : start + width]:
        n = (n << 6) | v
    return n, start + width


def parse_graph6(text: str) -> Graph:
    """Decode a single graph6 string; an optional ``>>graph6<<`` header is skipped."""
    body = text.strip()
    if body.startswith(GRAPH6_HEADER):
        body = body[len(GRAPH6_HEADER) :].lstrip()
    values = _sextets(body)
    n, used = _decode_size(values)

    pair_count = n * (n - 1) // 2
    needed = (pair_count + 5) // 6
    data = values[used:]
    if len(data) < needed:
        raise Graph6TruncatedError(f"Expected {needed} adjacency characters for n={n}, got {len(data)}")
    if len(data) > needed:
        raise Graph6TrailingDataError(f"{len(data) - needed} trailing character(s) after adjacency data")

    bits: List[int] = []
    for v in data:
        bits.extend((v >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[pair_count:]):
        raise Graph6TrailingDataError("Nonzero padding bits after adjacency data")

    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def _encode_size(n: int) -> str:
    if n <= _SMALL_LIMIT:
        return chr(n + 63)
    if n <= _MEDIUM_LIMIT:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def encode_graph6(g: Graph) -> str:
    """Inverse of :func:`parse_graph6` (no header, no newline)."""
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    chars = []
    for k in range(0, len(bits), 6):
        value = 0
        for bit in bits[k : k + 6]:
            value = (value << 1) | bit
        chars.append(chr(value + 63))
    return _encode_size(g.n) + "".join(chars)


def _is_count(token: str) -> bool:
    # ASCII digits only
    return token.isascii() and token.isdigit()


def parse_edge_list(text: str) -> Graph:
    """Lines ``u v``; blank lines and ``#`` comments are ignored; first line may be ``n <count>``."""
    n: Optional[int] = None
    edges: List[Tuple[int, int]] = []
    seen: Set[Tuple[int, int]] = set()
    first = True
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if first and tokens[0] == "n":
            first = False
            if len(tokens) != 2 or not _is_count(tokens[1]):
                raise EdgeListError(lineno, f"bad header {line!r}, expected 'n <count>'")
            n = int(tokens[1])
            continue
        first = False
        if len(tokens) != 2:
            raise EdgeListError(lineno, f"expected two vertex ids, got {len(tokens)} token(s)")
        if not (_is_count(tokens[0]) and _is_count(tokens[1])):
            raise EdgeListError(lineno, f"vertex ids must be non-negative integers, got {line!r}")
        u, v = int(tokens[0]), int(tokens[1])
        if u == v:
            raise EdgeListError(lineno, f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise EdgeListError(lineno, f"duplicate edge {key}")
        if n is not None and key[1] >= n:
            raise EdgeListError(lineno, f"vertex {key[1]} outside 0..{n - 1}")
        seen.add(key)
        edges.append(key)

    if n is None:
        n = max((v for _, v in edges), default=-1) + 1
    return Graph.from_edges(n, edges)


def encode_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"
