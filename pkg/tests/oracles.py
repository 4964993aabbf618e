"""Brute-force reference computations, independent of the library code paths."""

import random
from fractions import Fraction
from itertools import combinations

from roughgraph import InformationSystem


def indiscernible(sys, a, b, attrs):
    return all(sys.rows[sys.objects.index(a)][sys.condition_attributes.index(x)]
               == sys.rows[sys.objects.index(b)][sys.condition_attributes.index(x)] for x in attrs)


def class_of(sys, f, attrs):
    return {o for o in sys.objects if indiscernible(sys, f, o, attrs)}


def lower(sys, g, attrs):
    return {x for x in sys.objects if class_of(sys, x, attrs) <= set(g)}


def upper(sys, g, attrs):
    return {x for x in sys.objects if class_of(sys, x, attrs) & set(g)}


def omega(sys, g, attrs, f):
    c = class_of(sys, f, attrs)
    return Fraction(len(c & set(g)), len(c))


def rough_edges(weights):
    """All pairs allowed by the max-membership rule, as frozensets."""
    return {frozenset((a, b)) for a, b in combinations(list(weights), 2) if max(weights[a], weights[b]) > 0}


def random_system(rng: random.Random, max_objects=20, max_attrs=4, max_values=3):
    n = rng.randint(1, max_objects)
    k = rng.randint(1, max_attrs)
    attrs = tuple(f"a{i}" for i in range(k))
    values = [rng.randint(1, max_values) for _ in attrs]
    rows = tuple(tuple(str(rng.randrange(v)) for v in values) for _ in range(n))
    sys = InformationSystem(tuple(str(i) for i in range(1, n + 1)), attrs, None, rows)
    g = rng.sample(sys.objects, rng.randint(1, n))
    return sys, set(g)
