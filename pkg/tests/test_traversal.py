import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from roughgraph import (
    RoughGraph,
    extract_rough_path,
    find_rough_path,
    from_information_system,
    generate_complete,
    is_rough_cycle,
    is_rough_path,
    is_rough_trail,
    is_rough_walk,
)
from roughgraph.errors import GraphError, UnknownVertexError


@pytest.fixture(scope="module")
def churn_graph(table3):
    return from_information_system(table3, decision_value="True")


@pytest.fixture
def triangle():
    return generate_complete(3, prefix="")


def test_walk_in_churn_graph(churn_graph):
    assert is_rough_walk(churn_graph, ["4", "5"])
    assert is_rough_walk(churn_graph, ["4"])


def test_listed_churn_walk_fails_threshold(churn_graph):
    # vertices 2 and 3 have membership 0 for G = churned sections
    assert not is_rough_walk(churn_graph, ["1", "2", "4", "5", "2", "6", "3"])


def test_unknown_vertex(churn_graph):
    with pytest.raises(UnknownVertexError):
        is_rough_walk(churn_graph, ["4", "9"])
    with pytest.raises(ValueError):
        is_rough_walk(churn_graph, [])


def test_walk_trail_path(triangle):
    assert is_rough_walk(triangle, ["1", "2", "1"])
    assert not is_rough_trail(triangle, ["1", "2", "1"])
    assert is_rough_path(triangle, ["1", "2", "3"])
    assert is_rough_trail(triangle, ["1", "2", "3"])
    assert not is_rough_walk(triangle, ["1", "1"])


def test_cycles(triangle):
    assert is_rough_cycle(triangle, ["1", "2", "3", "1"])
    assert not is_rough_cycle(triangle, ["1", "2", "1"])
    square = RoughGraph(
        {"a": 1, "b": 1, "c": Fraction(1, 4), "d": 1},
        [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")],
    )
    assert not is_rough_cycle(square, ["a", "b", "c", "d", "a"])
    assert is_rough_cycle(square, ["a", "b", "c", "d", "a"], threshold=Fraction(1, 4))


def test_extract_example():
    g = RoughGraph(
        {v: 1 for v in ["1", "2", "4", "5", "6"]},
        [("1", "2"), ("2", "4"), ("4", "5"), ("5", "2"), ("2", "6")],
    )
    walk = ["1", "2", "4", "5", "2", "6"]
    assert extract_rough_path(g, walk) == ("1", "2", "6")
    assert extract_rough_path(g, ["1", "2", "6"]) == ("1", "2", "6")


def test_extract_closed_walk(triangle):
    assert extract_rough_path(triangle, ["1", "2", "1"]) == ("1",)


def test_extract_rejects_non_walk(churn_graph):
    with pytest.raises(GraphError):
        extract_rough_path(churn_graph, ["1", "2"])


def test_find_path(churn_graph):
    path = find_rough_path(churn_graph, "4", "6")
    assert path == ("4", "6")
    assert set(path) <= {"1", "4", "5", "6"}
    assert is_rough_path(churn_graph, path)
    assert find_rough_path(churn_graph, "4", "4") == ("4",)
    assert find_rough_path(churn_graph, "4", "2") is None


def test_find_path_respects_threshold():
    g = RoughGraph({"a": 1, "b": Fraction(1, 3), "c": 1, "d": Fraction(1, 2)},
                   [("a", "b"), ("b", "c"), ("a", "d"), ("d", "c")])
    assert find_rough_path(g, "a", "c") == ("a", "d", "c")
    assert find_rough_path(g, "a", "c", threshold=Fraction(2, 3)) is None


def random_walk(rng, g, length):
    eligible = [v for v in g if g.omega(v) >= Fraction(1, 2)]
    walk = [rng.choice(eligible)]
    for _ in range(length):
        options = [w for w in g.neighbors(walk[-1]) if g.omega(w) >= Fraction(1, 2)]
        if not options:
            break
        walk.append(rng.choice(options))
    return walk


def random_graph(rng, n):
    ids = [str(i) for i in range(n)]
    weights = {v: Fraction(rng.randint(2, 4), 4) for v in ids}
    edges = [(a, b) for i, a in enumerate(ids) for b in ids[i + 1:] if rng.random() < 0.4]
    return RoughGraph(weights, edges)


@given(st.integers(0, 2**32 - 1))
def test_traversal_properties(seed):
    rng = random.Random(seed)
    g = random_graph(rng, rng.randint(1, 8))
    walk = random_walk(rng, g, rng.randint(0, 12))
    assert is_rough_walk(g, walk)
    path = extract_rough_path(g, walk)
    assert is_rough_path(g, path)
    assert (path[0], path[-1]) == (walk[0], walk[-1])
    assert set(path) <= set(walk) and len(set(path)) == len(path)
    for s in (walk, path):
        if is_rough_path(g, s):
            assert is_rough_trail(g, s)
        if is_rough_trail(g, s):
            assert is_rough_walk(g, s)
        if is_rough_cycle(g, s):
            assert s[0] == s[-1]
        if not is_rough_walk(g, s, Fraction(1, 2)):
            assert not is_rough_walk(g, s, Fraction(3, 4))
    found = find_rough_path(g, walk[0], walk[-1])
    assert found is not None and is_rough_path(g, found)
