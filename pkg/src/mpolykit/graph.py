"""
Simple undirected graphs, edge classification by endpoint degrees, and the
M-polynomial.

Edge-list text format
---------------------
ASCII, one record per line, fields separated by whitespace::

    # comment (anything after '#' is ignored)
    0 1        an edge between vertices 0 and 1
    7          declares vertex 7 (possibly isolated)

Vertex ids are nonnegative integers, not necessarily contiguous. Self-loops
and repeated edges (in either orientation) are rejected.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .bipoly import MPoly
from .errors import GraphError, ParseError, UnknownVertex

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u <= v else (v, u)


class Graph:
    """Immutable simple graph. Build with :meth:`from_edges` or :class:`GraphBuilder`."""

    __slots__ = ("_adj", "_edges")

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[Edge] = ()):
        adj: dict[int, set[int]] = {}
        for v in vertices:
            _check_id(v)
            adj.setdefault(v, set())
        seen: set[Edge] = set()
        for u, v in edges:
            _check_id(u)
            _check_id(v)
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            e = _norm(u, v)
            if e in seen:
                raise GraphError(f"duplicate edge {e[0]}-{e[1]}")
            seen.add(e)
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}
        self._edges = frozenset(seen)

    @classmethod
    def from_edges(cls, edges: Iterable[Edge], vertices: Iterable[int] = ()) -> "Graph":
        return cls(vertices, edges)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self._adj)

    @property
    def edges(self) -> frozenset[Edge]:
        return self._edges

    def order(self) -> int:
        return len(self._adj)

    def size(self) -> int:
        return len(self._edges)

    def neighbors(self, v: int) -> frozenset[int]:
        try:
            return self._adj[v]
        except KeyError:
            raise UnknownVertex(v) from None

    def sorted_edges(self) -> list[Edge]:
        return sorted(self._edges)

    def relabel(self, mapping: Mapping[int, int]) -> "Graph":
        return Graph((mapping[v] for v in self._adj),
                     ((mapping[u], mapping[v]) for u, v in self._edges))

    def is_connected(self) -> bool:
        if not self._adj:
            return True
        start = next(iter(self._adj))
        seen = {start}
        stack = [start]
        while stack:
            for w in self._adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self._adj)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj.keys() == other._adj.keys() and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((frozenset(self._adj), self._edges))

    def __repr__(self) -> str:
        return f"Graph(order={self.order()}, size={self.size()})"


class GraphBuilder:
    """Mutable accumulator used by the generators; call :meth:`build` when done."""

    def __init__(self) -> None:
        self._next = 0
        self._vertices: list[int] = []
        self._edges: list[Edge] = []

    def new_vertex(self) -> int:
        v = self._next
        self._next += 1
        self._vertices.append(v)
        return v

    def add_edge(self, u: int, v: int) -> None:
        self._edges.append((u, v))

    def add_cycle(self, vs: list[int]) -> None:
        for a, b in zip(vs, vs[1:] + vs[:1]):
            self.add_edge(a, b)

    def build(self) -> Graph:
        return Graph(self._vertices, self._edges)


def _check_id(v: object) -> None:
    if isinstance(v, bool) or not isinstance(v, int) or v < 0:
        raise GraphError(f"vertex ids must be nonnegative integers, got {v!r}")


def degree(g: Graph, v: int) -> int:
    return len(g.neighbors(v))


def degree_histogram(g: Graph) -> dict[int, int]:
    """Map degree -> number of vertices with that degree (degree 0 included)."""
    return dict(sorted(Counter(len(ns) for ns in g._adj.values()).items()))


@dataclass(frozen=True)
class EdgeTypeCounts:
    """The m_{i,j} table: number of edges whose endpoint degrees are {i, j}, i <= j."""

    counts: Mapping[tuple[int, int], int]

    def __post_init__(self) -> None:
        clean = {}
        for (i, j), c in self.counts.items():
            if c < 0:
                raise ValueError("edge counts are nonnegative")
            if c:
                clean[_norm(i, j)] = clean.get(_norm(i, j), 0) + c
        object.__setattr__(self, "counts", dict(sorted(clean.items())))

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.counts.get(_norm(*key), 0)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.counts)

    def items(self):
        return self.counts.items()

    def total(self) -> int:
        return sum(self.counts.values())

    def to_mpoly(self) -> MPoly:
        return MPoly({k: c for k, c in self.counts.items()})

    @classmethod
    def from_mpoly(cls, p: MPoly) -> "EdgeTypeCounts":
        counts = {}
        for (i, j), c in p.items():
            if c.denominator != 1 or c < 0:
                raise ValueError(f"coefficient {c} of x^{i} y^{j} is not an edge count")
            counts[(i, j)] = int(c)
        return cls(counts)


def edge_type_counts(g: Graph) -> EdgeTypeCounts:
    deg = {v: len(ns) for v, ns in g._adj.items()}
    return EdgeTypeCounts(Counter(_norm(deg[u], deg[v]) for u, v in g._edges))


def m_polynomial(g: Graph) -> MPoly:
    return edge_type_counts(g).to_mpoly()


def parse_edge_list(text: str) -> Graph:
    vertices: list[int] = []
    edges: list[Edge] = []
    seen: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) > 2:
            raise ParseError(f"line {lineno}: expected 1 or 2 vertex ids, got {len(fields)}")
        try:
            ids = [int(f, 10) for f in fields]
        except ValueError:
            raise ParseError(f"line {lineno}: vertex ids must be integers: {line!r}") from None
        if any(v < 0 for v in ids):
            raise ParseError(f"line {lineno}: negative vertex id")
        if len(ids) == 1:
            vertices.append(ids[0])
            continue
        u, v = ids
        if u == v:
            raise ParseError(f"line {lineno}: self-loop at vertex {u}")
        e = _norm(u, v)
        if e in seen:
            raise ParseError(f"line {lineno}: duplicate edge {u} {v}")
        seen.add(e)
        edges.append((u, v))
    return Graph(vertices, edges)


def format_edge_list(g: Graph, header: Iterable[str] = ()) -> str:
    lines = [f"# {h}" for h in header]
    touched = set()
    for u, v in g.sorted_edges():
        lines.append(f"{u} {v}")
        touched.update((u, v))
    lines.extend(str(v) for v in sorted(g.vertices - touched))
    return "\n".join(lines) + "\n"

