"""Union, join and cartesian product of rough graphs; grid and ladder graphs."""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .errors import GraphError, OverlappingVerticesError
from .rough_graph import RoughGraph, generate_complete, generate_path

__all__ = [
    "ProductVertex",
    "cartesian_product",
    "generate_grid",
    "generate_ladder",
    "matches_grid",
    "matches_ladder",
    "product_degree",
    "product_id",
    "rough_join",
    "rough_union",
]


class ProductVertex(NamedTuple):
    left: str
    right: str
    omega: Fraction

    @property
    def id(self) -> str:
        return product_id(self.left, self.right)


def product_id(left: str, right: str) -> str:
    return f"{left},{right}"


def _disjoint(g1: RoughGraph, g2: RoughGraph) -> None:
    shared = [v for v in g1 if v in g2]
    if shared:
        raise OverlappingVerticesError(f"vertex sets overlap: {', '.join(shared)}")


def rough_union(g1: RoughGraph, g2: RoughGraph) -> RoughGraph:
    """Disjoint union; every vertex keeps its own weight."""
    _disjoint(g1, g2)
    return RoughGraph([*g1.weights().items(), *g2.weights().items()], g1.edges() + g2.edges())


def rough_join(g1: RoughGraph, g2: RoughGraph) -> RoughGraph:
    """Disjoint union plus an edge between every vertex of ``g1`` and every vertex of ``g2``."""
    _disjoint(g1, g2)
    cross = [(a, b) for a in g1 for b in g2]
    return RoughGraph([*g1.weights().items(), *g2.weights().items()], g1.edges() + g2.edges() + cross)


def cartesian_product(g1: RoughGraph, g2: RoughGraph) -> RoughGraph:
    """Cartesian product with product weight ``min(w1(u), w2(v))``.

    ``(u, v)`` and ``(x, y)`` are adjacent when ``u == x`` and ``vy`` is an
    edge of ``g2``, or ``ux`` is an edge of ``g1`` and ``v == y``. Product
    vertices are named ``"u,v"`` and ordered row-major over the factors.
    """
    if not len(g1) or not len(g2):
        raise GraphError("cartesian product needs two non-empty graphs")
    vertices = [
        ProductVertex(u, v, min(g1.omega(u), g2.omega(v)))
        for u in g1
        for v in g2
    ]
    edges = [(product_id(u, a), product_id(u, b)) for u in g1 for a, b in g2.edges()]
    edges += [(product_id(a, v), product_id(b, v)) for a, b in g1.edges() for v in g2]
    return RoughGraph([(pv.id, pv.omega) for pv in vertices], edges)


def product_degree(g: RoughGraph, v: str) -> Fraction:
    """Weighted degree: sum over incident edges of the smaller endpoint weight."""
    w = g.omega(v)
    return sum((min(w, g.omega(x)) for x in g.neighbors(v)), Fraction(0))


def generate_grid(m: int, n: int, row_weights=None, col_weights=None) -> RoughGraph:
    """Grid rough graph: product of rough paths ``u1..um`` and ``v1..vn``."""
    return cartesian_product(generate_path(m, row_weights, prefix="u"), generate_path(n, col_weights, prefix="v"))


def generate_ladder(n: int, rail_weights=None, rung_weights=None) -> RoughGraph:
    """Ladder with ``n`` rungs: product of the complete graph ``u1, u2`` and the path ``v1..vn``."""
    if n < 2:
        raise GraphError("ladder needs n >= 2")
    return cartesian_product(generate_complete(2, rung_weights, prefix="u"), generate_path(n, rail_weights, prefix="v"))


def _path_order(labels: list[str], adjacency: dict[str, set[str]]) -> list[str] | None:
    """Order ``labels`` along the path that ``adjacency`` describes, or None."""
    if len(labels) == 1:
        return labels if not adjacency[labels[0]] else None
    ends = [x for x in labels if len(adjacency[x]) == 1]
    if len(ends) != 2 or any(len(adjacency[x]) > 2 for x in labels):
        return None
    order = [min(ends, key=labels.index)]
    while len(order) < len(labels):
        step = [y for y in adjacency[order[-1]] if y not in order[-2:-1]]
        if len(step) != 1:
            return None
        order.append(step[0])
    return order if len(set(order)) == len(labels) else None


def matches_grid(g: RoughGraph, m: int, n: int) -> bool:
    """Check that ``g`` is labelled as the product of an m-path and an n-path.

    Vertices must be ``"left,right"`` pairs covering an m x n label grid, and
    the edge set must equal the grid adjacency along the paths induced on the
    left and right labels.
    """
    if m < 1 or n < 1 or len(g) != m * n:
        return False
    pairs = {}
    for vid in g:
        parts = vid.split(",")
        if len(parts) != 2:
            return False
        pairs[vid] = tuple(parts)
    lefts = list(dict.fromkeys(p[0] for p in pairs.values()))
    rights = list(dict.fromkeys(p[1] for p in pairs.values()))
    if len(lefts) != m or len(rights) != n or len(set(pairs.values())) != m * n:
        return False

    left_adj: dict[str, set[str]] = {x: set() for x in lefts}
    right_adj: dict[str, set[str]] = {y: set() for y in rights}
    for a, b in g.edges():
        (u, v), (x, y) = pairs[a], pairs[b]
        if u == x and v != y:
            right_adj[v].add(y)
            right_adj[y].add(v)
        elif v == y and u != x:
            left_adj[u].add(x)
            left_adj[x].add(u)
        else:
            return False
    left_order = _path_order(lefts, left_adj)
    right_order = _path_order(rights, right_adj)
    if left_order is None or right_order is None:
        return False

    expected = {frozenset((product_id(u, a), product_id(u, b))) for u in left_order for a, b in zip(right_order, right_order[1:])}
    expected |= {frozenset((product_id(a, v), product_id(b, v))) for a, b in zip(left_order, left_order[1:]) for v in right_order}
    return g.edge_set() == expected


def matches_ladder(g: RoughGraph, n: int) -> bool:
    """A ladder with ``n`` rungs is the 2 x n grid (the 2-vertex complete graph is a 2-path)."""
    return n >= 2 and matches_grid(g, 2, n)
