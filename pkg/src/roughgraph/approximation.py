"""Lower/upper approximations, boundary regions and rough membership."""

from __future__ import annotations

from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from fractions import Fraction

from .errors import EmptyTargetError, SystemMismatchError
from .information_system import InformationSystem, ObjectSet, Partition

__all__ = [
    "ApproximationResult",
    "MembershipMap",
    "approximate",
    "boundary",
    "lower_approximation",
    "membership",
    "membership_map",
    "upper_approximation",
]


def _check_same_system(p: Partition, g: ObjectSet) -> None:
    if p.system is not g.system and p.system != g.system:
        raise SystemMismatchError("partition and target set come from different information systems")


def lower_approximation(p: Partition, g: ObjectSet) -> ObjectSet:
    """Union of the blocks lying wholly inside ``g``."""
    _check_same_system(p, g)
    return ObjectSet(p.system, frozenset(o for b in p.blocks if g.members.issuperset(b) for o in b))


def upper_approximation(p: Partition, g: ObjectSet) -> ObjectSet:
    """Union of the blocks that meet ``g``."""
    _check_same_system(p, g)
    return ObjectSet(p.system, frozenset(o for b in p.blocks if not g.members.isdisjoint(b) for o in b))


def boundary(p: Partition, g: ObjectSet) -> ObjectSet:
    upper = upper_approximation(p, g)
    return ObjectSet(p.system, upper.members - lower_approximation(p, g).members)


@dataclass(frozen=True)
class ApproximationResult:
    lower: ObjectSet
    upper: ObjectSet
    boundary: ObjectSet

    def as_dict(self) -> dict[str, list[str]]:
        return {"lower": self.lower.ids(), "upper": self.upper.ids(), "boundary": self.boundary.ids()}


def approximate(p: Partition, g: ObjectSet) -> ApproximationResult:
    lower = lower_approximation(p, g)
    upper = upper_approximation(p, g)
    return ApproximationResult(lower, upper, ObjectSet(p.system, upper.members - lower.members))


def membership(p: Partition, g: ObjectSet, f: str) -> Fraction:
    """Fraction of the indiscernibility class of ``f`` that lies in ``g``.

    Both the numerator and the denominator use the class of ``f`` under the
    partition's attributes.
    """
    _check_same_system(p, g)
    if not g.members:
        raise EmptyTargetError("rough membership needs a non-empty target set")
    block = p.block(f)
    return Fraction(sum(1 for o in block if o in g.members), len(block))


class MembershipMap(Mapping[str, Fraction]):
    """Total map from object id to rough membership, in object order."""

    def __init__(self, system: InformationSystem, values: Mapping[str, Fraction]):
        if set(values) != set(system.objects):
            raise ValueError("membership map must cover every object exactly once")
        self.system = system
        self._values = {o: Fraction(values[o]) for o in system.objects}

    def __getitem__(self, obj: str) -> Fraction:
        return self._values[obj]

    def __iter__(self) -> Iterator[str]:
        return iter(self._values)

    def __len__(self) -> int:
        return len(self._values)

    def __repr__(self) -> str:
        inner = ", ".join(f"{k}: {v}" for k, v in self._values.items())
        return f"MembershipMap({{{inner}}})"

    def to_json(self) -> list[dict]:
        return [
            {"id": o, "omega": {"num": w.numerator, "den": w.denominator}}
            for o, w in self._values.items()
        ]


def membership_map(p: Partition, g: ObjectSet) -> MembershipMap:
    _check_same_system(p, g)
    if not g.members:
        raise EmptyTargetError("rough membership needs a non-empty target set")
    per_block = [Fraction(sum(1 for o in b if o in g.members), len(b)) for b in p.blocks]
    return MembershipMap(p.system, {o: per_block[p.block_of[o]] for o in p.system.objects})
