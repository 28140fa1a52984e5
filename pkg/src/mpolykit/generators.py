"""
Constructors for the Bethe cactus families D_n, C_n, E_n and the octagonal
lattice G(p, q), together with their closed-form M-polynomials.

Cacti are glued by vertex identification: a copy of D_{n-1} is attached to a
host vertex by making its root *be* that vertex, so no bridge edge appears.
Vertex ids are assigned in preorder over the recursion, which keeps the
output of :func:`mpolykit.graph.format_edge_list` stable between runs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bipoly import MPoly
from .errors import InvalidParameter
from .graph import Graph, GraphBuilder

FAMILIES = ("D", "C", "E")


@dataclass(frozen=True)
class RootedGraph:
    graph: Graph
    root: int


@dataclass(frozen=True)
class LatticeParams:
    p: int
    q: int

    def __post_init__(self) -> None:
        for name in ("p", "q"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int) or v < 1:
                raise InvalidParameter(f"lattice parameter {name} must be a positive integer, got {v!r}")


def _check_n(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InvalidParameter(f"family index n must be a positive integer, got {n!r}")


def _grow_d(b: GraphBuilder, root: int, n: int) -> None:
    """Hang D_n off the existing vertex ``root``."""
    others = [b.new_vertex() for _ in range(3)]
    b.add_cycle([root, *others])
    if n > 1:
        for v in others:
            _grow_d(b, v, n - 1)


def bethe_d(n: int) -> RootedGraph:
    _check_n(n)
    b = GraphBuilder()
    root = b.new_vertex()
    _grow_d(b, root, n)
    return RootedGraph(b.build(), root)


def bethe_c(n: int) -> Graph:
    _check_n(n)
    b = GraphBuilder()
    square = [b.new_vertex() for _ in range(4)]
    b.add_cycle(square)
    if n > 1:
        for v in square:
            _grow_d(b, v, n - 1)
    return b.build()


def bethe_e(n: int) -> Graph:
    _check_n(n)
    b = GraphBuilder()
    center = b.new_vertex()
    ends = [b.new_vertex(), b.new_vertex()]
    for v in ends:
        b.add_edge(center, v)
    if n > 1:
        for v in (center, *ends):
            _grow_d(b, v, n - 1)
    return b.build()


def bethe(family: str, n: int) -> Graph:
    if family == "D":
        return bethe_d(n).graph
    if family == "C":
        return bethe_c(n)
    if family == "E":
        return bethe_e(n)
    raise InvalidParameter(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")


def closed_form_mpoly(family: str, n: int) -> MPoly:
    """M-polynomial of D_n / C_n / E_n from the closed formulas, no graph built."""
    _check_n(n)
    if family == "D":
        if n == 1:
            return MPoly({(2, 2): 4})
        t = 3 ** (n - 1)
        return MPoly({(2, 2): 2 * t, (2, 4): 2 * (t + 1), (4, 4): 2 * (t - 2)})
    if family == "C":
        if n == 1:
            return MPoly({(2, 2): 4})
        t = 3 ** (n - 2)
        return MPoly({(2, 2): 8 * t, (2, 4): 8 * t, (4, 4): 4 * (2 * t - 1)})
    if family == "E":
        if n == 1:
            return MPoly({(1, 2): 2})
        if n == 2:
            return MPoly({(2, 2): 6, (2, 3): 4, (2, 4): 2, (3, 4): 2})
        t = 3 ** (n - 1)
        return MPoly({(2, 2): 2 * t, (2, 4): 2 * t, (3, 4): 6, (4, 4): 2 * t - 10})
    raise InvalidParameter(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")


# Lattice G(p, q).
#
# Coordinates are doubled so every point is an integer pair. Each of the p+1
# horizontal bands is a strip of 2q hexagons between two zigzags; band k
# occupies heights 8k..8k+4. Consecutive bands are joined per column by two
# 3-vertex connectors, closing one octagon per column and one pentagon above
# and below each horizontal rung between neighbouring columns.

def _lattice_edges(p: int, q: int) -> set[tuple[tuple[int, int], tuple[int, int]]]:
    width = 8 * q
    edges = set()

    def link(a, b):
        edges.add((a, b) if a <= b else (b, a))

    for k in range(p + 1):
        base = 8 * k
        lower = [(x, base + (1 if x % 4 == 0 else 0)) for x in range(0, width + 1, 2)]
        upper = [(x, base + (3 if x % 4 == 0 else 4)) for x in range(0, width + 1, 2)]
        for row in (lower, upper):
            for a, b in zip(row, row[1:]):
                link(a, b)
        for x in range(0, width + 1, 4):
            link((x, base + 1), (x, base + 3))
    for k in range(p):
        base = 8 * k
        for c in range(q):
            x0 = 8 * c
            for dx, waist in ((2, 1), (6, 7)):
                mid = (x0 + waist, base + 6)
                link((x0 + dx, base + 4), mid)
                link(mid, (x0 + dx, base + 8))
            if c < q - 1:
                link((x0 + 7, base + 6), (x0 + 9, base + 6))
    return edges


def lattice(params: LatticeParams | tuple[int, int]) -> Graph:
    if not isinstance(params, LatticeParams):
        params = LatticeParams(*params)
    edges = _lattice_edges(params.p, params.q)
    points = sorted({pt for e in edges for pt in e}, key=lambda xy: (xy[1], xy[0]))
    ids = {pt: i for i, pt in enumerate(points)}
    return Graph(range(len(points)), ((ids[a], ids[b]) for a, b in edges))


def face_counts(params: LatticeParams | tuple[int, int]) -> tuple[int, int, int, int]:
    """(octagons, hexagons, pentagons, total faces including the outer one)."""
    if not isinstance(params, LatticeParams):
        params = LatticeParams(*params)
    p, q = params.p, params.q
    octagons = p * q
    hexagons = 2 * q * (p + 1)
    pentagons = 2 * p * (q - 1)
    return octagons, hexagons, pentagons, octagons + hexagons + pentagons + 1


def lattice_mpoly(params: LatticeParams | tuple[int, int]) -> MPoly:
    if not isinstance(params, LatticeParams):
        params = LatticeParams(*params)
    p, q = params.p, params.q
    return MPoly({
        (2, 2): 2 * p + 6,
        (2, 3): 8 * p + 8 * q - 4,
        (3, 3): 15 * p * q - 10 * p + 2 * q - 1,
    })
