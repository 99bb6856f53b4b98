import json

from kmroots.classify import HasseEdge, HasseGraph, build_hasse, system_by_id
from kmroots.dsl import one_line
from kmroots.emit import emit_dot, emit_json, hasse_to_json


def test_single_node():
    g = HasseGraph(("H3-1",), ())
    text = emit_dot(g)
    assert text == (
        "digraph subsystems {\n"
        "  node [shape=box];\n"
        f'  "H3-1" [label="{one_line(system_by_id("H3-1"))}"];\n'
        "}\n"
    )
    assert "->" not in text


def test_edge_attributes():
    edges = (
        HasseEdge("H4-28", "H4-26", 12, 3, "solid", True, ()),
        HasseEdge("H4-28", "H4-27", 5, 2, "dashed", True, ()),
        HasseEdge("H4-13", "H4-8", 4, 4, "dotted", False, ()),
    )
    g = HasseGraph(("H4-8", "H4-13", "H4-26", "H4-27", "H4-28"), edges)
    text = emit_dot(g)
    assert '"H4-28" -> "H4-26" [style=solid, label="12 (3)"];' in text
    assert '"H4-28" -> "H4-27" [style=dashed, label="5"];' in text
    assert '"H4-13" -> "H4-8" [style=dotted];' in text


def test_undecomposed_pair_graph(undecomposed):
    rec = undecomposed[0]
    g = build_hasse([rec])
    text = emit_dot(g)
    assert text.count("->") == 1
    assert "style=solid" in text or "style=dashed" in text
    assert 'label="5' in text


def test_output_is_deterministic(catalog):
    g1 = build_hasse(catalog, verified=set(range(len(catalog))))
    g2 = build_hasse(list(reversed(catalog)), verified=set(range(len(catalog))))
    assert emit_dot(g1) == emit_dot(g2)
    assert emit_json(g1) == emit_json(g2)


def test_json_shape(catalog):
    g = build_hasse(catalog[:5], verified=set(range(5)))
    data = json.loads(emit_json(g))
    assert data == hasse_to_json(g)
    assert {e["style"] for e in data["edges"]} <= {"solid", "dashed", "dotted"}
    assert [n["id"] for n in data["nodes"]] == list(g.nodes)
