"""Command-line front end: ``roughgraph <subcommand> ...``.

Exit status is 0 on success (a ``path`` query answering ``none`` included),
2 on invalid input and 1 on unexpected internal failure.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import export
from .approximation import approximate, membership_map
from .errors import RoughSetError
from .graph_ops import cartesian_product, rough_join, rough_union
from .information_system import partition, read_decision_table, target_set
from .rough_graph import HALF, degree, from_membership
from .traversal import find_rough_path

_FRACTION = re.compile(r"\s*(\d+)\s*(?:/\s*(\d+)\s*)?")


class UsageError(RoughSetError):
    pass


def parse_threshold(text: str) -> Fraction:
    """Parse ``p/q`` (or a bare integer) exactly; decimals are rejected."""
    match = _FRACTION.fullmatch(text)
    if not match:
        raise UsageError(f"threshold must be a fraction p/q, got {text!r}")
    num, den = int(match[1]), int(match[2] or 1)
    if den == 0:
        raise UsageError("threshold denominator must be positive")
    return Fraction(num, den)


def _split(text: str | None) -> list[str] | None:
    if text is None:
        return None
    return [part.strip() for part in text.split(",") if part.strip()]


def _load_table(args):
    return read_decision_table(args.table, decision=args.decision, id_column=not args.no_id_column)


def _target(sys_, args):
    if args.target_value is None and args.target_ids is None:
        raise UsageError("a target set is required: --target-value or --target-ids")
    if args.target_value is not None and args.target_ids is not None:
        raise UsageError("give only one of --target-value and --target-ids")
    if args.target_value is not None:
        return target_set(sys_, decision_value=args.target_value)
    return target_set(sys_, ids=_split(args.target_ids))


def _partition(args):
    sys_ = _load_table(args)
    attrs = _split(args.attrs)
    if attrs is not None and not attrs:
        raise UsageError("--attrs must name at least one attribute")
    return sys_, partition(sys_, attrs)


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False) + "\n"


def cmd_partition(args) -> str:
    _, p = _partition(args)
    if args.format == "text":
        return "".join(" ".join(block) + "\n" for block in p.blocks)
    return _dump({"attributes": list(p.attributes), "blocks": [list(b) for b in p.blocks]})


def cmd_membership(args) -> str:
    sys_, p = _partition(args)
    return _dump(membership_map(p, _target(sys_, args)).to_json())


def cmd_approx(args) -> str:
    sys_, p = _partition(args)
    result = approximate(p, _target(sys_, args)).as_dict()
    if args.format == "text":
        return "".join(f"{k}: {' '.join(v)}\n" for k, v in result.items())
    return _dump(result)


def _emit_graph(g, fmt: str) -> str:
    if fmt == "dot":
        return export.graph_to_dot(g)
    if fmt == "degrees":
        return "".join(f"{v} {degree(g, v)}\n" for v in g)
    return export.graph_to_json(g)


def cmd_graph(args) -> str:
    sys_, p = _partition(args)
    g = from_membership(membership_map(p, _target(sys_, args)))
    return _emit_graph(g, args.format)


def _read_graph(path):
    with open(path, encoding="utf-8") as fh:
        return export.graph_from_json(fh.read())


_OPS = {"union": rough_union, "join": rough_join, "product": cartesian_product}


def cmd_ops(args) -> str:
    g = _OPS[args.op](_read_graph(args.left), _read_graph(args.right))
    return _emit_graph(g, args.format)


def cmd_path(args) -> str:
    g = _read_graph(args.graph)
    path = find_rough_path(g, args.source, args.dest, parse_threshold(args.threshold))
    return ("none" if path is None else " ".join(path)) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="roughgraph", description="Rough sets and rough graphs from decision tables.")
    sub = parser.add_subparsers(dest="command", required=True)

    def table_command(name, func, formats, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("table", help="decision table CSV")
        p.add_argument("--attrs", help="comma-separated condition attributes (default: all)")
        p.add_argument("--decision", help="decision column name (default: last column)")
        p.add_argument("--no-id-column", action="store_true", help="objects are numbered 1..n instead of read from the first column")
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--output", help="write to this file instead of stdout")
        p.set_defaults(func=func)
        return p

    def with_target(p):
        p.add_argument("--target-value", help="target set G = objects with this decision value")
        p.add_argument("--target-ids", help="target set G as comma-separated object ids")
        return p

    table_command("partition", cmd_partition, ["json", "text"], "indiscernibility classes")
    with_target(table_command("membership", cmd_membership, ["json"], "rough membership of every object"))
    with_target(table_command("approx", cmd_approx, ["json", "text"], "lower/upper approximation and boundary"))
    with_target(table_command("graph", cmd_graph, ["json", "dot", "degrees"], "rough graph of the table"))

    ops = sub.add_parser("ops", help="combine two graph JSON files")
    ops.add_argument("op", choices=sorted(_OPS))
    ops.add_argument("left")
    ops.add_argument("right")
    ops.add_argument("--format", choices=["json", "dot", "degrees"], default="json")
    ops.add_argument("--output")
    ops.set_defaults(func=cmd_ops)

    path = sub.add_parser("path", help="find a rough path between two vertices")
    path.add_argument("graph", help="graph JSON file")
    path.add_argument("--from", dest="source", required=True)
    path.add_argument("--to", dest="dest", required=True)
    path.add_argument("--threshold", default=str(HALF), help="exact fraction p/q (default 1/2)")
    path.add_argument("--output")
    path.set_defaults(func=cmd_path)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text = args.func(args)
        if args.output:
            with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    except (RoughSetError, OSError) as exc:
        print(f"roughgraph: error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001
        print(f"roughgraph: internal error: {exc!r}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
