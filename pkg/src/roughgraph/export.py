"""JSON and DOT serialisation of rough graphs."""

from __future__ import annotations

import json
from fractions import Fraction

from .errors import GraphError
from .rough_graph import RoughGraph


def omega_json(w: Fraction) -> dict[str, int]:
    return {"num": w.numerator, "den": w.denominator}


def graph_to_dict(g: RoughGraph) -> dict:
    return {
        "vertices": [{"id": v, "omega": omega_json(g.omega(v))} for v in g],
        "edges": [[a, b] for a, b in g.edges()],
    }


def graph_to_json(g: RoughGraph) -> str:
    return json.dumps(graph_to_dict(g), ensure_ascii=False) + "\n"


def graph_from_dict(data) -> RoughGraph:
    try:
        vertices = []
        for entry in data["vertices"]:
            om = entry["omega"]
            num, den = om["num"], om["den"]
            if not (isinstance(num, int) and isinstance(den, int)) or den <= 0:
                raise GraphError(f"invalid omega for vertex {entry['id']!r}")
            vertices.append((entry["id"], Fraction(num, den)))
        edges = [tuple(e) for e in data["edges"]]
    except (KeyError, TypeError) as exc:
        raise GraphError(f"malformed graph JSON: {exc}") from None
    if any(len(e) != 2 for e in edges):
        raise GraphError("every edge must list exactly two vertex ids")
    return RoughGraph(vertices, edges)


def graph_from_json(text: str) -> RoughGraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"invalid JSON: {exc}") from None
    return graph_from_dict(data)


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def graph_to_dot(g: RoughGraph, name: str = "rough") -> str:
    lines = [f"graph {name} {{"]
    for v in g:
        w = g.omega(v)
        label = f"{v} (ω={w.numerator}/{w.denominator})"
        lines.append(f"  {_dot_quote(v)} [label={_dot_quote(label)}];")
    for a, b in g.edges():
        lines.append(f"  {_dot_quote(a)} -- {_dot_quote(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
