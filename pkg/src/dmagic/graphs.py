"""Simple undirected graphs, orientations, product constructions, and the text format.

Vertices are 0-based integers.  Edge lists are kept canonical: every pair is
stored as (u, v) with u < v, deduplicated and sorted lexicographically, so
equal graphs compare equal and file output is byte-stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, List, Optional, Sequence, Tuple

__all__ = [
    "FormatError",
    "UndirectedGraph",
    "Orientation",
    "ProductIndexing",
    "complete",
    "empty_graph",
    "path",
    "cycle",
    "complete_multipartite",
    "lexicographic",
    "cartesian",
    "prism",
    "regularity",
    "graph_to_text",
    "parse_graph",
]


class FormatError(ValueError):
    """Raised for malformed text input; the message names the offending line."""


def _canonical_edges(vertex_count: int, edges: Iterable[Sequence[int]]) -> Tuple[Tuple[int, int], ...]:
    seen = set()
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if u == v:
            raise ValueError(f"loop at vertex {u} is not allowed")
        if u > v:
            u, v = v, u
        if not (0 <= u and v < vertex_count):
            raise ValueError(f"edge ({u}, {v}) out of range for {vertex_count} vertices")
        seen.add((u, v))
    return tuple(sorted(seen))


@dataclass(frozen=True)
class UndirectedGraph:
    """A finite simple graph with a canonical sorted edge list."""

    vertex_count: int
    edges: Tuple[Tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise ValueError(f"vertex_count must be non-negative, got {self.vertex_count}")
        canonical = _canonical_edges(self.vertex_count, self.edges)
        if canonical != tuple(tuple(e) for e in self.edges):
            raise ValueError("edge list is not canonical; use UndirectedGraph.from_edges")

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Sequence[int]]) -> "UndirectedGraph":
        """Build a graph, canonicalizing the edge list (orderings, duplicates)."""
        return cls(vertex_count, _canonical_edges(vertex_count, edges))

    @cached_property
    def _incidence(self) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
        inc: List[List[Tuple[int, int]]] = [[] for _ in range(self.vertex_count)]
        for idx, (u, v) in enumerate(self.edges):
            inc[u].append((idx, v))
            inc[v].append((idx, u))
        return tuple(tuple(x) for x in inc)

    def incident(self, v: int) -> Tuple[Tuple[int, int], ...]:
        """(edge_index, neighbor) pairs for vertex v."""
        return self._incidence[v]

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return tuple(n for _, n in self._incidence[v])

    def degree(self, v: int) -> int:
        return len(self._incidence[v])

    @property
    def edge_count(self) -> int:
        return len(self.edges)


def regularity(graph: UndirectedGraph) -> Optional[int]:
    """The common degree r if the graph is r-regular, else None."""
    if graph.vertex_count == 0:
        return 0
    degrees = {graph.degree(v) for v in range(graph.vertex_count)}
    if len(degrees) == 1:
        return degrees.pop()
    return None


@dataclass(frozen=True)
class Orientation:
    """An orientation of a graph's edges.

    bits[i] = 0 orients stored edge (u, v) as the arc u -> v, bits[i] = 1 as
    v -> u.
    """

    graph: UndirectedGraph
    bits: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.bits) != len(self.graph.edges):
            raise ValueError(
                f"expected {len(self.graph.edges)} orientation bits, got {len(self.bits)}"
            )
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("orientation bits must be 0 or 1")

    def arcs(self) -> List[Tuple[int, int]]:
        """(tail, head) per edge, in canonical edge order."""
        out = []
        for (u, v), b in zip(self.graph.edges, self.bits):
            out.append((u, v) if b == 0 else (v, u))
        return out

    def reverse(self) -> "Orientation":
        """Flip every arc."""
        return Orientation(self.graph, tuple(1 - b for b in self.bits))

    @classmethod
    def from_arcs(cls, graph: UndirectedGraph, arcs: Iterable[Tuple[int, int]]) -> "Orientation":
        """Build an orientation from (tail, head) pairs covering each edge once."""
        index = {e: i for i, e in enumerate(graph.edges)}
        bits: List[Optional[int]] = [None] * len(graph.edges)
        for tail, head in arcs:
            key = (tail, head) if tail < head else (head, tail)
            if key not in index:
                raise ValueError(f"arc ({tail}, {head}) is not an edge of the graph")
            i = index[key]
            if bits[i] is not None:
                raise ValueError(f"edge {key} oriented twice")
            bits[i] = 0 if (tail, head) == key else 1
        if any(b is None for b in bits):
            missing = [graph.edges[i] for i, b in enumerate(bits) if b is None]
            raise ValueError(f"edges left unoriented: {missing}")
        return cls(graph, tuple(b for b in bits if b is not None))


@dataclass(frozen=True)
class ProductIndexing:
    """1-based coordinates (k, i) <-> flat vertex ids for a two-level product.

    Vertex (k, i), with k in 1..outer_count and i in 1..inner_count, gets id
    (k - 1) * inner_count + (i - 1), so inner blocks are consecutive.
    """

    outer_count: int
    inner_count: int

    def __post_init__(self) -> None:
        if self.outer_count < 1 or self.inner_count < 1:
            raise ValueError("product indexing needs positive block counts")

    def vertex(self, k: int, i: int) -> int:
        if not (1 <= k <= self.outer_count and 1 <= i <= self.inner_count):
            raise ValueError(f"coordinates ({k}, {i}) out of range")
        return (k - 1) * self.inner_count + (i - 1)

    def coords(self, vertex_id: int) -> Tuple[int, int]:
        if not 0 <= vertex_id < self.outer_count * self.inner_count:
            raise ValueError(f"vertex id {vertex_id} out of range")
        return vertex_id // self.inner_count + 1, vertex_id % self.inner_count + 1


def complete(n: int) -> UndirectedGraph:
    """The complete graph on n >= 1 vertices."""
    if n < 1:
        raise ValueError(f"complete graph needs n >= 1, got {n}")
    return UndirectedGraph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n)))


def empty_graph(n: int) -> UndirectedGraph:
    """n isolated vertices."""
    if n < 0:
        raise ValueError(f"empty graph needs n >= 0, got {n}")
    return UndirectedGraph(n, ())


def path(n: int) -> UndirectedGraph:
    """The path on n >= 1 vertices."""
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return UndirectedGraph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> UndirectedGraph:
    """The cycle on n >= 3 vertices."""
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return UndirectedGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_multipartite(sizes: Sequence[int]) -> UndirectedGraph:
    """Complete multipartite graph; part i occupies a consecutive index block."""
    if not sizes or any(s < 1 for s in sizes):
        raise ValueError(f"part sizes must be positive, got {list(sizes)}")
    starts = [0]
    for s in sizes:
        starts.append(starts[-1] + s)
    n = starts[-1]
    edges = []
    for a in range(len(sizes)):
        for b in range(a + 1, len(sizes)):
            for u in range(starts[a], starts[a + 1]):
                for v in range(starts[b], starts[b + 1]):
                    edges.append((u, v))
    return UndirectedGraph.from_edges(n, edges)


def lexicographic(g: UndirectedGraph, h: UndirectedGraph) -> UndirectedGraph:
    """Lexicographic product: (g1, h1) ~ (g2, h2) iff g1 ~ g2, or g1 = g2 and h1 ~ h2."""
    idx = ProductIndexing(g.vertex_count, h.vertex_count)
    edges = []
    for gu, gv in g.edges:
        for hu in range(1, h.vertex_count + 1):
            for hv in range(1, h.vertex_count + 1):
                edges.append((idx.vertex(gu + 1, hu), idx.vertex(gv + 1, hv)))
    for gu in range(1, g.vertex_count + 1):
        for hu, hv in h.edges:
            edges.append((idx.vertex(gu, hu + 1), idx.vertex(gu, hv + 1)))
    return UndirectedGraph.from_edges(g.vertex_count * h.vertex_count, edges)


def cartesian(g: UndirectedGraph, h: UndirectedGraph) -> UndirectedGraph:
    """Cartesian product: one coordinate adjacent, the other equal."""
    idx = ProductIndexing(g.vertex_count, h.vertex_count)
    edges = []
    for gu, gv in g.edges:
        for hu in range(1, h.vertex_count + 1):
            edges.append((idx.vertex(gu + 1, hu), idx.vertex(gv + 1, hu)))
    for gu in range(1, g.vertex_count + 1):
        for hu, hv in h.edges:
            edges.append((idx.vertex(gu, hu + 1), idx.vertex(gu, hv + 1)))
    return UndirectedGraph.from_edges(g.vertex_count * h.vertex_count, edges)


def prism(n: int) -> UndirectedGraph:
    """The prism over an n-cycle (two cycle layers joined by a perfect matching)."""
    if n < 3:
        raise ValueError(f"prism needs n >= 3, got {n}")
    return cartesian(path(2), cycle(n))


def graph_to_text(graph: UndirectedGraph) -> str:
    """Canonical text form: header line then one 'e u v' line per edge."""
    lines = [f"graph {graph.vertex_count} {len(graph.edges)}"]
    lines.extend(f"e {u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> UndirectedGraph:
    """Parse the graph text format; raises FormatError naming the bad line.

    Lines starting with '#' are comments.  Edges must appear canonically
    (u < v, strictly increasing lexicographic order).
    """
    header: Optional[Tuple[int, int]] = None
    edges: List[Tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if fields[0] != "graph" or len(fields) != 3:
                raise FormatError(f"line {lineno}: expected 'graph <vertices> <edges>'")
            try:
                header = (int(fields[1]), int(fields[2]))
            except ValueError:
                raise FormatError(f"line {lineno}: vertex/edge counts must be integers") from None
            if header[0] < 0 or header[1] < 0:
                raise FormatError(f"line {lineno}: counts must be non-negative")
            continue
        if fields[0] != "e" or len(fields) != 3:
            raise FormatError(f"line {lineno}: expected 'e <u> <v>'")
        try:
            u, v = int(fields[1]), int(fields[2])
        except ValueError:
            raise FormatError(f"line {lineno}: edge endpoints must be integers") from None
        if not 0 <= u < v < header[0]:
            raise FormatError(f"line {lineno}: edge ({u}, {v}) must satisfy 0 <= u < v < {header[0]}")
        if edges and (u, v) <= edges[-1]:
            raise FormatError(f"line {lineno}: edges must be strictly increasing")
        edges.append((u, v))
    if header is None:
        raise FormatError("line 1: missing 'graph' header")
    if len(edges) != header[1]:
        raise FormatError(f"line 1: header declares {header[1]} edges, found {len(edges)}")
    return UndirectedGraph(header[0], tuple(edges))
