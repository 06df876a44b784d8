import pytest
from hypothesis import given, settings

from conftest import complexes, cx
from icmkit.complex import void_complex
from icmkit.errors import ParseError
from icmkit.fileformat import format_edges, format_facets, parse_edges, parse_facets
from icmkit.graphs import cycle_graph


def test_basic_parse():
    c = parse_facets("a b\nb c  # trailing comment\n\n# full comment\n")
    assert c.vertices == ("a", "b", "c")
    assert c.facet_labels() == [("a", "b"), ("b", "c")]


def test_header_keeps_isolated_vertices():
    c = parse_facets("#vertices a b c d\na b\n")
    assert c.n == 4 and c.facets == (0b0011,)


def test_empty_face_and_void():
    assert parse_facets("#vertices a b\nempty-face\n").is_irrelevant
    v = parse_facets("#vertices a b\n")
    assert v.is_void and v.n == 2
    assert parse_facets("").is_void


def test_format_is_canonical():
    text = format_facets(cx(3, "23", "1"))
    assert text == "#vertices x1 x2 x3\nx1\nx2 x3\n"
    assert format_facets(cx(2, "")) == "#vertices x1 x2\nempty-face\n"
    assert format_facets(void_complex(2)) == "#vertices x1 x2\n"


@settings(max_examples=200, deadline=None)
@given(complexes(nmax=7, allow_void=True))
def test_roundtrip(c):
    text = format_facets(c)
    assert parse_facets(text) == c
    assert format_facets(parse_facets(text)) == text


@pytest.mark.parametrize(
    "text,line,col",
    [
        ("#vertices a b\na c\n", 2, 3),
        ("a b\n#vertices a b\n", 2, 1),
        ("a a\n", 1, 3),
        ("a empty-face\n", 1, 3),
        ("#vertices a a\n", 1, 13),
    ],
)
def test_facet_errors_carry_position(text, line, col):
    with pytest.raises(ParseError) as info:
        parse_facets(text, "f.txt")
    assert (info.value.line, info.value.column) == (line, col)
    assert str(info.value).startswith(f"f.txt:{line}:{col}:")


def test_edges_roundtrip():
    g = cycle_graph(5)
    assert parse_edges(format_edges(g)) == g
    h = parse_edges("u v\nv w\n")
    assert h.vertices == ("u", "v", "w") and h.edges == {(0, 1), (1, 2)}


@pytest.mark.parametrize("text,line,col", [("a b c\n", 1, 5), ("a\n", 1, 1), ("b b\n", 1, 3)])
def test_edge_errors(text, line, col):
    with pytest.raises(ParseError) as info:
        parse_edges(text)
    assert (info.value.line, info.value.column) == (line, col)
