import pytest
from hypothesis import given, strategies as st

from kmroots.classify import root_systems
from kmroots.diagrams import INF, CoxeterDiagram, GeneralizedCartanMatrix, enumerate_hyperbolic_simplex_diagrams
from kmroots.dsl import one_line, parse_coxeter, parse_diagram, parse_gcm, parse_roots, serialize
from kmroots.errors import BadLabel, DiagramSyntaxError, DuplicateEdge, IndexOutOfRange, SelfLoop

G = GeneralizedCartanMatrix.of


def test_spec_examples():
    D = parse_diagram("rank 2\nedge 1 2 3")
    assert D == CoxeterDiagram(2, frozenset({(0, 1, 3)}))
    assert parse_diagram("rank 2\nedge 1 2 4>") == G([[2, -1], [-2, 2]])
    assert parse_diagram("rank 2\nedge 1 2 inf") == G([[2, -2], [-2, 2]])


def test_arrow_directions():
    assert parse_diagram("rank 2\nedge 1 2 4<") == G([[2, -2], [-1, 2]])
    assert parse_diagram("rank 2\nedge 2 1 4>") == G([[2, -2], [-1, 2]])
    assert parse_diagram("rank 2\nedge 1 2 6>") == G([[2, -1], [-3, 2]])
    assert parse_diagram("rank 2\nedge 1 2 inf>") == G([[2, -1], [-4, 2]])


def test_kind_override_and_comments():
    text = "# a triangle\nrank 3   # three nodes\n\nedge 1 2 3\nedge 2 3 3\nedge 1 3 3\n"
    assert isinstance(parse_diagram(text), CoxeterDiagram)
    assert parse_gcm(text) == G([[2, -1, -1], [-1, 2, -1], [-1, -1, 2]])
    assert parse_coxeter("rank 2\nedge 1 2 4>") == CoxeterDiagram(2, frozenset({(0, 1, 4)}))
    with pytest.raises(ValueError):
        parse_diagram(text, kind="other")


@pytest.mark.parametrize(
    "text, exc, line, column",
    [
        ("rank 2\nedge 1 2 5", BadLabel, 2, 10),
        ("rank 2\nedge 1 2 3>", BadLabel, 2, 10),
        ("rank 3\nedge 1 2 3\nedge 2 1 4", DuplicateEdge, 3, 1),
        ("rank 2\nedge 2 2 3", SelfLoop, 2, 6),
        ("rank 2\nedge 1 3 3", IndexOutOfRange, 2, 8),
        ("edge 1 2 3", DiagramSyntaxError, 1, 1),
        ("rank 2\nnode 1", DiagramSyntaxError, 2, 1),
        ("rank 2\nedge 1 x 3", DiagramSyntaxError, 2, 8),
        ("rank 2\nedge 1 2", DiagramSyntaxError, 2, 1),
        ("", DiagramSyntaxError, 1, 1),
        ("rank 2\nrank 3", DiagramSyntaxError, 2, 1),
    ],
)
def test_errors_carry_positions(text, exc, line, column):
    with pytest.raises(exc) as info:
        parse_diagram(text)
    assert (info.value.line, info.value.column) == (line, column)
    assert f"line {line}, column {column}" in str(info.value)


def test_gcm_requires_arrow_on_double_edges():
    with pytest.raises(BadLabel):
        parse_gcm("rank 2\nedge 1 2 4")


def test_round_trip_all_hyperbolic_systems():
    for rank in range(3, 11):
        for A in root_systems(rank):
            text = serialize(A)
            assert parse_gcm(text) == A
            assert serialize(parse_gcm(text)) == text
        for D in enumerate_hyperbolic_simplex_diagrams(rank):
            text = serialize(D)
            assert parse_diagram(text, kind="coxeter") == D
            assert serialize(parse_diagram(text, kind="coxeter")) == text


@given(st.sampled_from(root_systems(4)), st.permutations(range(4)))
def test_serialize_is_canonicalization(A, perm):
    B = A.permuted(perm)
    lines = serialize(B).splitlines()
    # edges sorted by node pair, one per line
    pairs = [tuple(map(int, l.split()[1:3])) for l in lines[1:]]
    assert pairs == sorted(pairs)
    assert serialize(parse_gcm(serialize(B))) == serialize(B)


def test_one_line():
    assert one_line(G([[2, -1], [-2, 2]])) == "rank 2; edge 1 2 4>"


def test_parse_roots():
    assert parse_roots("1 0 0\n# comment\n0,1, 2\n\n") == [(1, 0, 0), (0, 1, 2)]
    assert parse_roots("-1 2") == [(-1, 2)]
    with pytest.raises(DiagramSyntaxError):
        parse_roots("1 a")
    with pytest.raises(DiagramSyntaxError):
        parse_roots("1 2\n1 2 3")
