"""Immutable simple graphs on at most 64 vertices.

Adjacency is stored as one integer bit-set per vertex, so neighbourhood
unions and BFS frontiers are plain integer operations.  The same module
handles the two text interchange formats: the ``n m`` edge-list format and
graph6.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64

GRAPH6_HEADER = ">>graph6<<"


class GraphError(ValueError):
    """Base class for invalid graph input."""

    code = "graph"


class SelfLoopError(GraphError):
    code = "self_loop"


class DuplicateEdgeError(GraphError):
    code = "duplicate_edge"


class VertexRangeError(GraphError):
    code = "vertex_range"


class Graph6Error(GraphError):
    code = "graph6"


class EdgeListFormatError(GraphError):
    code = "edge_list_format"


class DisconnectedGraphError(GraphError):
    code = "disconnected"


def _iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with vertices ``0..n-1``.

    ``rows[v]`` is the neighbour set of ``v`` as a bit mask.  Instances are
    validated on construction and never mutated afterwards.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise VertexRangeError(
                f"vertex count must be in 1..{MAX_VERTICES}, got {self.n}"
            )
        if len(self.rows) != self.n:
            raise GraphError(f"expected {self.n} adjacency rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise VertexRangeError(f"row {v} references a vertex >= {self.n}")
            if row >> v & 1:
                raise SelfLoopError(f"vertex {v} is adjacent to itself")
            for u in _iter_bits(row):
                if not self.rows[u] >> v & 1:
                    raise GraphError(f"adjacency is not symmetric for {{{u}, {v}}}")

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.rows]

    def neighbors(self, v: int) -> list[int]:
        return list(_iter_bits(self.rows[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in ascending order."""
        return [(u, v) for u in range(self.n) for v in _iter_bits(self.rows[u] >> (u + 1) << (u + 1))]

    def to_graph6(self) -> str:
        return emit_graph6(self)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, graph6={emit_graph6(self)!r})"


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph from 0-based vertex pairs.

    Raises :class:`SelfLoopError`, :class:`DuplicateEdgeError` or
    :class:`VertexRangeError` for the corresponding defects.
    """
    if not 1 <= n <= MAX_VERTICES:
        raise VertexRangeError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
    rows = [0] * n
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if rows[u] >> v & 1:
            raise DuplicateEdgeError(f"duplicate edge ({u}, {v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def is_connected(g: Graph) -> bool:
    """Breadth-first reachability from vertex 0."""
    full = (1 << g.n) - 1
    seen = frontier = 1
    while frontier:
        nxt = 0
        for v in _iter_bits(frontier):
            nxt |= g.rows[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == full


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.rows)))


# -- edge masks ---------------------------------------------------------------
#
# Pairs are ordered as graph6 orders its bits: (0,1), (0,2), (1,2), (0,3), ...
# Pair k is stored at mask bit (E - 1 - k), so ascending masks enumerate
# graphs in ascending graph6 string order for a fixed n.


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def pair_order(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, n) for i in range(j)]


def from_mask(n: int, mask: int) -> Graph:
    e = pair_count(n)
    rows = [0] * n
    for k, (i, j) in enumerate(pair_order(n)):
        if mask >> (e - 1 - k) & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def to_mask(g: Graph) -> int:
    e = pair_count(g.n)
    mask = 0
    for k, (i, j) in enumerate(pair_order(g.n)):
        if g.rows[i] >> j & 1:
            mask |= 1 << (e - 1 - k)
    return mask


# -- graph6 ---------------------------------------------------------------------


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))


def emit_graph6(g: Graph) -> str:
    bits = [1 if g.rows[i] >> j & 1 else 0 for i, j in pair_order(g.n)]
    bits += [0] * (-len(bits) % 6)
    chunks = (
        chr(63 + int("".join(map(str, bits[k : k + 6])), 2)) for k in range(0, len(bits), 6)
    )
    return _encode_size(g.n) + "".join(chunks)


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 string (an optional ``>>graph6<<`` header is allowed)."""
    s = line.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER) :]
    if not s:
        raise Graph6Error("empty graph6 string")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} at position {pos} is outside 63..126")
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] == 63:
        if len(vals) < 4 or vals[1] == 63:
            raise Graph6Error("malformed length header")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    else:
        n = vals[0]
        body = vals[1:]
    if n == 0:
        raise Graph6Error("graph6 string encodes zero vertices")
    if n > MAX_VERTICES:
        raise VertexRangeError(f"graph has {n} vertices; at most {MAX_VERTICES} supported")
    nbits = pair_count(n)
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(
            f"expected {(nbits + 5) // 6} data characters for n={n}, got {len(body)}"
        )
    acc = 0
    for v in body:
        acc = acc << 6 | v
    pad = len(body) * 6 - nbits
    if acc & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    acc >>= pad
    rows = [0] * n
    for k, (i, j) in enumerate(pair_order(n)):
        if acc >> (nbits - 1 - k) & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, tuple(rows))


# -- edge-list text ---------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines of ``u v``."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise EdgeListFormatError("empty edge list")
    try:
        header = [int(tok) for tok in lines[0]]
        pairs = [tuple(int(tok) for tok in ln) for ln in lines[1:]]
    except ValueError as exc:
        raise EdgeListFormatError(f"non-integer token: {exc}") from None
    if len(header) != 2:
        raise EdgeListFormatError("header must be 'n m'")
    n, m = header
    if len(pairs) != m:
        raise EdgeListFormatError(f"header announces {m} edges, found {len(pairs)}")
    for lineno, pair in enumerate(pairs, start=2):
        if len(pair) != 2:
            raise EdgeListFormatError(f"line {lineno}: expected 'u v'")
    return from_edge_list(n, pairs)


def emit_edge_list(g: Graph) -> str:
    edges = g.edges()
    return "\n".join([f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]) + "\n"
