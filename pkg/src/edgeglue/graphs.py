"""Core graph types: simple undirected graphs and signed bipartite graphs.

Both types are immutable values; every operation in the package is a pure
function of its inputs.  Vertices are dense 0-based integers.  Adjacency is
exposed as one Python int bitset per vertex, which makes candidate
intersection in the embedding backtracker a single ``&``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import cached_property

from .errors import EdgeNotInGraph, ParseError, VertexNotInGraph

GRAPH6_MAX_SHORT = 62


def _normalize_edge(e) -> tuple[int, int]:
    a, b = e
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class LabeledGraph:
    """Simple undirected graph on vertices 0..vertex_count-1."""

    vertex_count: int
    edges: frozenset[tuple[int, int]]

    def __init__(self, vertex_count: int, edges=()):
        if vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        norm = set()
        for e in edges:
            a, b = _normalize_edge(e)
            if a == b:
                raise ValueError(f"loop at vertex {a}")
            if not (0 <= a and b < vertex_count):
                raise ValueError(f"edge {(a, b)} out of range for n={vertex_count}")
            norm.add((a, b))
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "edges", frozenset(norm))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def sorted_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Neighborhood bitsets, one int per vertex."""
        adj = [0] * self.vertex_count
        for a, b in self.edges:
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        return tuple(adj)

    def neighbors(self, v: int) -> list[int]:
        m = self.adjacency[v]
        return [u for u in range(self.vertex_count) if m >> u & 1]

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(a.bit_count() for a in self.adjacency)

    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    def has_edge(self, a: int, b: int) -> bool:
        return _normalize_edge((a, b)) in self.edges

    def check_edge(self, e) -> tuple[int, int]:
        e = _normalize_edge(e)
        if e not in self.edges:
            raise EdgeNotInGraph(f"edge {e} not in graph")
        return e

    def check_vertex(self, v: int) -> int:
        if not 0 <= v < self.vertex_count:
            raise VertexNotInGraph(f"vertex {v} not in graph on {self.vertex_count} vertices")
        return v

    def relabel(self, perm) -> "LabeledGraph":
        """Apply vertex permutation: new index of v is perm[v]."""
        return LabeledGraph(self.vertex_count, [(perm[a], perm[b]) for a, b in self.edges])

    def is_connected(self) -> bool:
        if self.vertex_count == 0:
            return True
        seen = 1
        frontier = [0]
        while frontier:
            v = frontier.pop()
            for u in self.neighbors(v):
                if not seen >> u & 1:
                    seen |= 1 << u
                    frontier.append(u)
        return seen.bit_count() == self.vertex_count

    def is_forest(self) -> bool:
        parent = list(range(self.vertex_count))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.edges:
            ra, rb = find(a), find(b)
            if ra == rb:
                return False
            parent[ra] = rb
        return True

    def is_tree(self) -> bool:
        return self.is_connected() and self.edge_count == self.vertex_count - 1

    def to_json(self) -> str:
        return json.dumps(
            {"v": self.vertex_count, "edges": [list(e) for e in self.sorted_edges]},
            separators=(",", ":"),
        )

    @staticmethod
    def from_json(text: str) -> "LabeledGraph":
        try:
            obj = json.loads(text)
            return LabeledGraph(obj["v"], [tuple(e) for e in obj["edges"]])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad JSON graph: {exc}") from exc

    def __repr__(self):
        return f"LabeledGraph(n={self.vertex_count}, edges={sorted(self.edges)})"


@dataclass(frozen=True)
class SignedBipartiteGraph:
    """Bipartite graph with fixed + and - sides.

    Edges join a +-indexed vertex to a --indexed vertex; the two index
    spaces are independent (both 0-based).
    """

    plus_count: int
    minus_count: int
    edges: frozenset[tuple[int, int]]

    def __init__(self, plus_count: int, minus_count: int, edges=()):
        if plus_count < 0 or minus_count < 0:
            raise ValueError("part sizes must be nonnegative")
        norm = set()
        for p, q in edges:
            if not (0 <= p < plus_count and 0 <= q < minus_count):
                raise ValueError(f"edge {(p, q)} outside parts ({plus_count},{minus_count})")
            norm.add((p, q))
        object.__setattr__(self, "plus_count", plus_count)
        object.__setattr__(self, "minus_count", minus_count)
        object.__setattr__(self, "edges", frozenset(norm))

    @property
    def vertex_count(self) -> int:
        return self.plus_count + self.minus_count

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def sorted_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.edges))

    def check_edge(self, e) -> tuple[int, int]:
        e = tuple(e)
        if e not in self.edges:
            raise EdgeNotInGraph(f"edge {e} not in signed graph")
        return e

    def as_unsigned(self) -> LabeledGraph:
        """Flatten to a LabeledGraph: + vertices first, then - vertices."""
        m = self.plus_count
        return LabeledGraph(self.vertex_count, [(p, m + q) for p, q in self.edges])

    def to_json(self) -> str:
        return json.dumps(
            {
                "plus": self.plus_count,
                "minus": self.minus_count,
                "edges": [list(e) for e in self.sorted_edges],
            },
            separators=(",", ":"),
        )

    @staticmethod
    def from_json(text: str) -> "SignedBipartiteGraph":
        try:
            obj = json.loads(text)
            return SignedBipartiteGraph(obj["plus"], obj["minus"], [tuple(e) for e in obj["edges"]])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad JSON signed graph: {exc}") from exc

    def __repr__(self):
        return (
            f"SignedBipartiteGraph(m={self.plus_count}, n={self.minus_count}, "
            f"edges={sorted(self.edges)})"
        )


# ---------------------------------------------------------------------------
# Small named graphs
# ---------------------------------------------------------------------------


def cycle(k: int) -> LabeledGraph:
    if k < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return LabeledGraph(k, [(i, (i + 1) % k) for i in range(k)])


def path(k: int) -> LabeledGraph:
    """Path on k vertices (k-1 edges)."""
    if k < 1:
        raise ValueError("path needs at least 1 vertex")
    return LabeledGraph(k, [(i, i + 1) for i in range(k - 1)])


def star(k: int) -> LabeledGraph:
    """Star K_{1,k}: center 0 with k leaves."""
    if k < 1:
        raise ValueError("star needs at least 1 leaf")
    return LabeledGraph(k + 1, [(0, i) for i in range(1, k + 1)])


def complete(n: int) -> LabeledGraph:
    return LabeledGraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> LabeledGraph:
    return LabeledGraph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def empty_graph(n: int) -> LabeledGraph:
    return LabeledGraph(n, [])


def signed_cycle(k: int) -> SignedBipartiteGraph:
    """Even cycle with alternating +/- signs (+ holds the even positions)."""
    if k < 4 or k % 2:
        raise ValueError("signed cycle needs even length >= 4")
    half = k // 2
    edges = [(i, i) for i in range(half)] + [(i, (i - 1) % half) for i in range(half)]
    return SignedBipartiteGraph(half, half, edges)


def signed_complete_bipartite(m: int, n: int) -> SignedBipartiteGraph:
    return SignedBipartiteGraph(m, n, [(p, q) for p in range(m) for q in range(n)])


def signed_star(leaves: int, center_plus: bool = True) -> SignedBipartiteGraph:
    """Star K_{1,leaves} with the center on the + side (or - side)."""
    if center_plus:
        return SignedBipartiteGraph(1, leaves, [(0, q) for q in range(leaves)])
    return SignedBipartiteGraph(leaves, 1, [(p, 0) for p in range(leaves)])


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------


def encode_graph6(g: LabeledGraph) -> str:
    """Standard short-form graph6 encoding (n <= 62)."""
    n = g.vertex_count
    if n > GRAPH6_MAX_SHORT:
        raise ParseError(f"short-form graph6 supports n <= {GRAPH6_MAX_SHORT}, got {n}")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = val << 1 | b
        chars.append(chr(val + 63))
    return "".join(chars)


def decode_graph6(text: str) -> LabeledGraph:
    text = text.strip()
    if text.startswith(">>graph6<<"):
        text = text[10:]
    if not text:
        raise ParseError("empty graph6 string")
    for ch in text:
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"invalid graph6 character {ch!r}")
    n = ord(text[0]) - 63
    if n > GRAPH6_MAX_SHORT:
        raise ParseError("long-form graph6 not supported")
    body = text[1:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise ParseError(f"graph6 body length {len(body)}, expected {need} for n={n}")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    if any(bits[k:]):
        raise ParseError("nonzero padding bits in graph6 string")
    return LabeledGraph(n, edges)


# ---------------------------------------------------------------------------
# Inline graph names (CLI and tests): c4, p3, k2,3, s3, or raw graph6
# ---------------------------------------------------------------------------

_NAME_RE = re.compile(r"^(c|p|s)(\d+)$|^k(\d+),(\d+)$")


def parse_graph(text: str) -> LabeledGraph:
    """Parse c{k}/p{k}/s{k}/k{a},{b} names, JSON, or raw graph6."""
    text = text.strip()
    m = _NAME_RE.match(text.lower())
    if m:
        if m.group(3) is not None:
            return complete_bipartite(int(m.group(3)), int(m.group(4)))
        kind, k = m.group(1), int(m.group(2))
        if kind == "c":
            return cycle(k)
        if kind == "p":
            return path(k)
        return star(k)
    if text.startswith("{"):
        return LabeledGraph.from_json(text)
    return decode_graph6(text)


def parse_signed_graph(text: str) -> SignedBipartiteGraph:
    """Parse signed graphs: c{2k} (alternating cycle), k{a},{b}, s{k}+/s{k}-, or JSON."""
    text = text.strip()
    low = text.lower()
    m = re.match(r"^s(\d+)([+-])$", low)
    if m:
        return signed_star(int(m.group(1)), center_plus=m.group(2) == "+")
    m = re.match(r"^k(\d+),(\d+)$", low)
    if m:
        return signed_complete_bipartite(int(m.group(1)), int(m.group(2)))
    m = re.match(r"^c(\d+)$", low)
    if m:
        return signed_cycle(int(m.group(1)))
    if text.startswith("{"):
        return SignedBipartiteGraph.from_json(text)
    raise ParseError(f"cannot parse signed graph {text!r}")
