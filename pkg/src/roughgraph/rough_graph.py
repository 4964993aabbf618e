"""Vertex-weighted rough graphs built from rough membership values."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator, Mapping, Sequence
from fractions import Fraction
from itertools import combinations

from .approximation import membership_map
from .errors import GraphError, UnknownVertexError
from .information_system import InformationSystem, partition, target_set

__all__ = [
    "RoughGraph",
    "as_omega",
    "degree",
    "edge_count",
    "from_information_system",
    "from_membership",
    "generate_complete",
    "generate_cycle",
    "generate_path",
    "is_complete",
    "is_connected",
    "is_pendant_free",
    "is_regular",
    "max_degree",
    "min_degree",
    "vertex_count",
]

HALF = Fraction(1, 2)


def as_omega(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to an exact weight in [0, 1]."""
    if isinstance(value, float):
        raise TypeError("weights must be exact (int, Fraction or 'p/q'), not float")
    w = Fraction(value)
    if not 0 <= w <= 1:
        raise GraphError(f"weight {w} outside [0, 1]")
    return w


class RoughGraph:
    """Simple undirected graph whose vertices carry a weight in [0, 1].

    Vertices keep insertion order. Edges are unordered pairs; ``edges()``
    reports each as ``(a, b)`` with ``a`` inserted before ``b``, sorted by
    those insertion positions. Instances are not mutated after construction.
    """

    __slots__ = ("_omega", "_pos", "_adj", "_edge_count")

    def __init__(self, vertices: Mapping[str, object] | Iterable[tuple[str, object]] = (), edges: Iterable[Sequence[str]] = ()):
        items = vertices.items() if isinstance(vertices, Mapping) else vertices
        self._omega: dict[str, Fraction] = {}
        for vid, w in items:
            if not isinstance(vid, str):
                raise GraphError(f"vertex id {vid!r} is not a string")
            if vid in self._omega:
                raise GraphError(f"duplicate vertex id {vid!r}")
            self._omega[vid] = as_omega(w)
        self._pos = {v: i for i, v in enumerate(self._omega)}
        self._adj: dict[str, set[str]] = {v: set() for v in self._omega}
        count = 0
        for edge in edges:
            a, b = edge
            for v in (a, b):
                if v not in self._omega:
                    raise UnknownVertexError(f"edge endpoint {v!r} is not a vertex")
            if a == b:
                raise GraphError(f"self-loop on {a!r}")
            if b in self._adj[a]:
                raise GraphError(f"duplicate edge {{{a!r}, {b!r}}}")
            self._adj[a].add(b)
            self._adj[b].add(a)
            count += 1
        self._edge_count = count

    @property
    def vertices(self) -> tuple[str, ...]:
        return tuple(self._omega)

    def __len__(self) -> int:
        return len(self._omega)

    def __iter__(self) -> Iterator[str]:
        return iter(self._omega)

    def __contains__(self, v: object) -> bool:
        return v in self._omega

    def _check(self, v: str) -> None:
        if v not in self._omega:
            raise UnknownVertexError(f"unknown vertex {v!r}")

    def omega(self, v: str) -> Fraction:
        self._check(v)
        return self._omega[v]

    def weights(self) -> dict[str, Fraction]:
        return dict(self._omega)

    def position(self, v: str) -> int:
        self._check(v)
        return self._pos[v]

    def neighbors(self, v: str) -> list[str]:
        """Neighbours of ``v`` in vertex insertion order."""
        self._check(v)
        return sorted(self._adj[v], key=self._pos.__getitem__)

    def has_edge(self, a: str, b: str) -> bool:
        self._check(a)
        self._check(b)
        return b in self._adj[a]

    def edges(self) -> list[tuple[str, str]]:
        pos = self._pos
        out = [(a, b) for a, nbrs in self._adj.items() for b in nbrs if pos[a] < pos[b]]
        out.sort(key=lambda e: (pos[e[0]], pos[e[1]]))
        return out

    def edge_set(self) -> frozenset[frozenset[str]]:
        return frozenset(frozenset(e) for e in self.edges())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RoughGraph):
            return NotImplemented
        return list(self._omega.items()) == list(other._omega.items()) and self._adj == other._adj

    __hash__ = None

    def __repr__(self) -> str:
        return f"RoughGraph(vertices={len(self._omega)}, edges={self._edge_count})"


def from_membership(m: Mapping[str, object]) -> RoughGraph:
    """Join two distinct objects whenever either has positive membership."""
    if not m:
        raise GraphError("membership map is empty")
    weights = {v: as_omega(w) for v, w in m.items()}
    ids = list(weights)
    edges = [(a, b) for a, b in combinations(ids, 2) if max(weights[a], weights[b]) > 0]
    return RoughGraph(weights, edges)


def from_information_system(
    sys: InformationSystem,
    attrs: Iterable[str] | None = None,
    *,
    decision_value: str | None = None,
    ids: Iterable[str] | None = None,
) -> RoughGraph:
    p = partition(sys, attrs)
    g = target_set(sys, decision_value=decision_value, ids=ids)
    return from_membership(membership_map(p, g))


def degree(g: RoughGraph, v: str) -> int:
    g._check(v)
    return len(g._adj[v])


def _degrees(g: RoughGraph) -> list[int]:
    if not len(g):
        raise GraphError("graph has no vertices")
    return [len(g._adj[v]) for v in g]


def max_degree(g: RoughGraph) -> int:
    return max(_degrees(g))


def min_degree(g: RoughGraph) -> int:
    return min(_degrees(g))


def is_regular(g: RoughGraph) -> bool:
    degs = _degrees(g)
    return max(degs) == min(degs)


def edge_count(g: RoughGraph) -> int:
    return g._edge_count


def vertex_count(g: RoughGraph) -> int:
    return len(g)


def is_complete(g: RoughGraph) -> bool:
    n = len(g)
    return g._edge_count == n * (n - 1) // 2


def is_connected(g: RoughGraph) -> bool:
    if not len(g):
        raise GraphError("connectivity of an empty graph is undefined")
    start = next(iter(g))
    seen = {start}
    queue = deque([start])
    while queue:
        for w in g._adj[queue.popleft()]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(g)


def is_pendant_free(g: RoughGraph) -> bool:
    return all(len(nbrs) != 1 for nbrs in g._adj.values())


def _weights(n: int, weights, what: str) -> list[Fraction]:
    if weights is None:
        return [Fraction(1)] * n
    weights = [as_omega(w) for w in weights]
    if len(weights) != n:
        raise GraphError(f"{what} needs {n} weights, got {len(weights)}")
    return weights


def generate_complete(n: int, weights=None, prefix: str = "v") -> RoughGraph:
    """Complete rough graph on vertices ``{prefix}1 .. {prefix}n``.

    At most one weight may be zero; two zero-weight vertices would not be
    adjacent under the max-membership rule.
    """
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    ws = _weights(n, weights, "complete graph")
    if sum(1 for w in ws if w == 0) > 1:
        raise GraphError("complete rough graph allows at most one zero weight")
    ids = [f"{prefix}{i}" for i in range(1, n + 1)]
    return RoughGraph(zip(ids, ws), combinations(ids, 2))


def _check_threshold(ws: list[Fraction], what: str) -> None:
    low = [w for w in ws if w < HALF]
    if low:
        raise GraphError(f"{what} weights must be >= 1/2, got {low[0]}")


def generate_path(n: int, weights=None, prefix: str = "v") -> RoughGraph:
    """Rough path ``{prefix}1 - {prefix}2 - ... - {prefix}n``; all weights >= 1/2."""
    if n < 1:
        raise GraphError("path needs n >= 1")
    ws = _weights(n, weights, "path")
    _check_threshold(ws, "rough path")
    ids = [f"{prefix}{i}" for i in range(1, n + 1)]
    return RoughGraph(zip(ids, ws), zip(ids, ids[1:]))


def generate_cycle(n: int, weights=None, prefix: str = "v") -> RoughGraph:
    if n < 3:
        raise GraphError("rough cycle needs n >= 3")
    ws = _weights(n, weights, "cycle")
    _check_threshold(ws, "rough cycle")
    ids = [f"{prefix}{i}" for i in range(1, n + 1)]
    return RoughGraph(zip(ids, ws), list(zip(ids, ids[1:])) + [(ids[-1], ids[0])])
