"""Rough walks, trails, paths and cycles.

Every vertex of a rough walk, endpoints included, must carry a weight of at
least ``threshold`` (1/2 by default), and consecutive vertices must be
adjacent. A single vertex is a walk (and a path) of length zero.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Sequence
from fractions import Fraction

from .errors import GraphError
from .rough_graph import HALF, RoughGraph

__all__ = [
    "extract_rough_path",
    "find_rough_path",
    "is_rough_cycle",
    "is_rough_path",
    "is_rough_trail",
    "is_rough_walk",
]


def _validate(g: RoughGraph, seq: Sequence[str]) -> None:
    if not seq:
        raise ValueError("vertex sequence must be non-empty")
    for v in seq:
        g.omega(v)


def is_rough_walk(g: RoughGraph, seq: Sequence[str], threshold: Fraction = HALF) -> bool:
    _validate(g, seq)
    if any(g.omega(v) < threshold for v in seq):
        return False
    return all(g.has_edge(a, b) for a, b in zip(seq, seq[1:]))


def is_rough_trail(g: RoughGraph, seq: Sequence[str], threshold: Fraction = HALF) -> bool:
    if not is_rough_walk(g, seq, threshold):
        return False
    steps = [frozenset(e) for e in zip(seq, seq[1:])]
    return len(set(steps)) == len(steps)


def is_rough_path(g: RoughGraph, seq: Sequence[str], threshold: Fraction = HALF) -> bool:
    return is_rough_walk(g, seq, threshold) and len(set(seq)) == len(seq)


def is_rough_cycle(g: RoughGraph, seq: Sequence[str], threshold: Fraction = HALF) -> bool:
    if not is_rough_walk(g, seq, threshold):
        return False
    interior = seq[:-1]
    return seq[0] == seq[-1] and len(set(interior)) == len(interior) >= 3


def extract_rough_path(g: RoughGraph, walk: Sequence[str], threshold: Fraction = HALF) -> tuple[str, ...]:
    """Reduce a rough walk to a rough path between the same endpoints.

    Scanning left to right, the loop between the first repeated vertex and
    its earlier occurrence is cut out; this repeats until no vertex repeats.
    """
    if not is_rough_walk(g, walk, threshold):
        raise GraphError("input sequence is not a rough walk")
    seq = list(walk)
    while True:
        first_seen: dict[str, int] = {}
        for i, v in enumerate(seq):
            if v in first_seen:
                seq = seq[: first_seen[v]] + seq[i:]
                break
            first_seen[v] = i
        else:
            return tuple(seq)


def find_rough_path(g: RoughGraph, u: str, v: str, threshold: Fraction = HALF) -> tuple[str, ...] | None:
    """Breadth-first rough path from ``u`` to ``v``, or None.

    Only vertices with weight >= ``threshold`` are traversed; neighbours are
    visited in insertion order, so the result is deterministic.
    """
    if g.omega(u) < threshold or g.omega(v) < threshold:
        return None
    parent: dict[str, str | None] = {u: None}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == v:
            path = [x]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])
            return tuple(reversed(path))
        for y in g.neighbors(x):
            if y not in parent and g.omega(y) >= threshold:
                parent[y] = x
                queue.append(y)
    return None
