"""DOT and JSON output for Hasse graphs."""

from __future__ import annotations

import json

from .classify import HasseGraph
from .dsl import one_line

_STYLE = {"solid": "solid", "dashed": "dashed", "dotted": "dotted"}


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(g: HasseGraph, name: str = "subsystems") -> str:
    """DOT digraph, upper system -> subsystem; byte-stable for a given graph."""
    lines = [f"digraph {name} {{", "  node [shape=box];"]
    for ident in g.nodes:
        lines.append(f"  {_quote(ident)} [label={_quote(one_line(g.node_matrix(ident)))}];")
    for e in g.edges:
        attrs = [f"style={_STYLE[e.style]}"]
        if e.label:
            attrs.append(f"label={_quote(e.label)}")
        lines.append(f"  {_quote(e.upper)} -> {_quote(e.lower)} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def hasse_to_json(g: HasseGraph) -> dict:
    return {
        "nodes": [{"id": ident, "diagram": one_line(g.node_matrix(ident))} for ident in g.nodes],
        "edges": [
            {
                "upper": e.upper,
                "lower": e.lower,
                "group_index": e.group_index,
                "lattice_index": e.lattice_index,
                "style": e.style,
                "minimal": e.minimal,
                "label": e.label,
                "sub_roots": [list(r) for r in e.sub_roots],
            }
            for e in g.edges
        ],
    }


def emit_json(g: HasseGraph) -> str:
    return json.dumps(hasse_to_json(g), indent=2) + "\n"
