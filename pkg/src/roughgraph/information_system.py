"""Categorical decision tables and their indiscernibility partitions."""

from __future__ import annotations

import csv
import io
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from typing import TextIO

from .errors import EmptyTargetError, TableFormatError, UnknownAttributeError, UnknownObjectError

__all__ = [
    "InformationSystem",
    "ObjectSet",
    "Partition",
    "parse_decision_table",
    "read_decision_table",
    "partition",
    "target_set",
]


@dataclass(frozen=True)
class InformationSystem:
    """A finite universe of objects described by categorical attribute values.

    ``rows[i]`` holds the values of ``objects[i]`` for every condition
    attribute, followed by the decision value when a decision attribute is set.
    """

    objects: tuple[str, ...]
    condition_attributes: tuple[str, ...]
    decision_attribute: str | None
    rows: tuple[tuple[str, ...], ...]
    _index: dict[str, int] = field(init=False, repr=False, compare=False)
    _columns: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        index: dict[str, int] = {}
        for i, obj in enumerate(self.objects):
            if obj in index:
                raise TableFormatError(f"duplicate object id {obj!r}")
            index[obj] = i
        names = list(self.condition_attributes)
        if self.decision_attribute is not None:
            names.append(self.decision_attribute)
        if len(set(names)) != len(names):
            raise TableFormatError("attribute names must be unique")
        if len(self.rows) != len(self.objects):
            raise TableFormatError("one row of values is required per object")
        for obj, row in zip(self.objects, self.rows):
            if len(row) != len(names):
                raise TableFormatError(f"row for object {obj!r} has {len(row)} values, expected {len(names)}")
            if any(v == "" for v in row):
                raise TableFormatError(f"row for object {obj!r} has an empty cell")
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_columns", {name: i for i, name in enumerate(names)})

    def __len__(self) -> int:
        return len(self.objects)

    def index(self, obj: str) -> int:
        try:
            return self._index[obj]
        except KeyError:
            raise UnknownObjectError(f"unknown object id {obj!r}") from None

    def value(self, obj: str, attribute: str) -> str:
        if attribute not in self._columns:
            raise UnknownAttributeError(f"unknown attribute {attribute!r}")
        return self.rows[self.index(obj)][self._columns[attribute]]

    def decision(self, obj: str) -> str:
        if self.decision_attribute is None:
            raise UnknownAttributeError("information system has no decision attribute")
        return self.value(obj, self.decision_attribute)

    def object_set(self, members: Iterable[str]) -> ObjectSet:
        members = frozenset(members)
        for obj in members:
            self.index(obj)
        return ObjectSet(self, members)

    def universe(self) -> ObjectSet:
        return ObjectSet(self, frozenset(self.objects))


@dataclass(frozen=True)
class ObjectSet:
    """A subset of the objects of one information system.

    Iteration follows the parent system's object order.
    """

    system: InformationSystem
    members: frozenset[str]

    def __iter__(self) -> Iterator[str]:
        return iter(sorted(self.members, key=self.system.index))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, obj: object) -> bool:
        return obj in self.members

    def ids(self) -> list[str]:
        return list(self)

    def complement(self) -> ObjectSet:
        return ObjectSet(self.system, frozenset(self.system.objects) - self.members)


@dataclass(frozen=True)
class Partition:
    """Indiscernibility classes of ``system`` under ``attributes``."""

    system: InformationSystem
    attributes: tuple[str, ...]
    blocks: tuple[tuple[str, ...], ...]
    block_of: dict[str, int] = field(compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.blocks)

    def block(self, obj: str) -> tuple[str, ...]:
        self.system.index(obj)
        return self.blocks[self.block_of[obj]]


def parse_decision_table(
    text: str | TextIO,
    *,
    decision: str | None = None,
    has_decision: bool = True,
    id_column: bool = True,
) -> InformationSystem:
    """Parse a comma-separated decision table.

    The first line is the header. With ``id_column`` the first column holds
    object identifiers, otherwise objects are numbered ``1..n`` in row order.
    The decision attribute is ``decision`` when given, else the last column
    (unless ``has_decision`` is false).
    """
    if isinstance(text, str):
        text = io.StringIO(text)
    records = [[cell.strip() for cell in row] for row in csv.reader(text)]
    records = [row for row in records if any(row)]
    if not records:
        raise TableFormatError("table is empty")
    header, *body = records
    if any(name == "" for name in header):
        raise TableFormatError("header contains an empty column name")
    for lineno, row in enumerate(body, start=2):
        if len(row) != len(header):
            raise TableFormatError(f"line {lineno}: ragged row with {len(row)} cells, expected {len(header)}")
        for name, cell in zip(header, row):
            if cell == "":
                raise TableFormatError(f"line {lineno}: empty cell in column {name!r}")

    if id_column:
        if len(header) < 2:
            raise TableFormatError("table needs an id column and at least one attribute")
        objects = [row[0] for row in body]
        attributes = header[1:]
        values = [row[1:] for row in body]
    else:
        objects = [str(i) for i in range(1, len(body) + 1)]
        attributes = header
        values = body

    if decision is not None:
        if decision not in attributes:
            raise UnknownAttributeError(f"decision column {decision!r} not found")
        decision_pos = attributes.index(decision)
    elif has_decision and len(attributes) >= 2:
        decision_pos = len(attributes) - 1
    else:
        decision_pos = None

    if decision_pos is None:
        return InformationSystem(tuple(objects), tuple(attributes), None, tuple(tuple(r) for r in values))
    conditions = tuple(a for i, a in enumerate(attributes) if i != decision_pos)
    rows = tuple(tuple(v for i, v in enumerate(r) if i != decision_pos) + (r[decision_pos],) for r in values)
    return InformationSystem(tuple(objects), conditions, attributes[decision_pos], rows)


def read_decision_table(path, **options) -> InformationSystem:
    with open(path, encoding="utf-8", newline="") as fh:
        return parse_decision_table(fh, **options)


def partition(sys: InformationSystem, attrs: Iterable[str] | None = None) -> Partition:
    """Group objects that agree on every attribute in ``attrs``.

    ``attrs=None`` selects all condition attributes. Blocks are ordered by
    their first member; members keep the system's object order.
    """
    attrs = sys.condition_attributes if attrs is None else tuple(dict.fromkeys(attrs))
    if not attrs:
        raise UnknownAttributeError("attribute set must be non-empty")
    for a in attrs:
        if a not in sys.condition_attributes:
            raise UnknownAttributeError(f"unknown condition attribute {a!r}")
    # canonical column order so permutations of attrs give identical blocks
    columns = [a for a in sys.condition_attributes if a in attrs]
    groups: dict[tuple[str, ...], list[str]] = {}
    for obj in sys.objects:
        key = tuple(sys.value(obj, a) for a in columns)
        groups.setdefault(key, []).append(obj)
    blocks = tuple(tuple(members) for members in groups.values())
    block_of = {obj: i for i, members in enumerate(blocks) for obj in members}
    return Partition(sys, tuple(columns), blocks, block_of)


def target_set(
    sys: InformationSystem,
    *,
    decision_value: str | None = None,
    ids: Iterable[str] | None = None,
) -> ObjectSet:
    """Select the non-empty target set G by decision value or explicit ids."""
    if (decision_value is None) == (ids is None):
        raise ValueError("give exactly one of decision_value or ids")
    if decision_value is not None:
        if sys.decision_attribute is None:
            raise UnknownAttributeError("information system has no decision attribute")
        result = sys.object_set(o for o in sys.objects if sys.decision(o) == decision_value)
    else:
        result = sys.object_set(ids)
    if not result.members:
        raise EmptyTargetError("target set is empty")
    return result
