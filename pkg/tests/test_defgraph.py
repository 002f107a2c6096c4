import pytest

from coxcay.defgraph import (
    INF,
    DefiningGraph,
    complement,
    connected_components,
    induced_subgraph,
    is_separating,
    link,
    parse_graph,
    star,
)
from coxcay.errors import GraphError, GraphParseError


def test_parse_basic(load):
    g = load("p4")
    assert g.vertices == ("a", "b", "c", "d")
    assert g.m("a", "b") == 2
    assert g.m("a", "c") == INF
    assert g.m("b", "b") == 1
    assert g.edges == ((0, 1, 2), (1, 2, 2), (2, 3, 2))
    assert g.is_right_angled


def test_comments_and_blank_lines():
    g = parse_graph("# header\n\nvertex x  # first\nvertex y\nedge x y 3\n")
    assert g.m("x", "y") == 3
    assert not g.is_right_angled


@pytest.mark.parametrize(
    "text, lineno",
    [
        ("vertex a\nvertex a\n", 2),
        ("vertex a\nedge a b 2\n", 2),
        ("vertex a\nedge a a 2\n", 2),
        ("vertex a\nvertex b\nedge a b two\n", 3),
        ("vertex a\nvertex b\n\nedge a b 1\n", 4),
        ("vertex a\nvertex b\nedge a b 2\nedge b a 3\n", 4),
        ("vertex a\nvertex b\nedge a b 65\n", 3),
        ("vertex a\nnode b\n", 2),
        ("vertex\n", 1),
        ("vertex ε\n", 1),
    ],
)
def test_parse_errors_report_line(text, lineno):
    with pytest.raises(GraphParseError) as err:
        parse_graph(text)
    assert err.value.lineno == lineno
    assert str(err.value).startswith(f"line {lineno}:")


def test_max_weight_is_configurable():
    g = parse_graph("vertex a\nvertex b\nedge a b 100\n", max_weight=100)
    assert g.m(0, 1) == 100


def test_repeated_consistent_edge_is_fine():
    g = parse_graph("vertex a\nvertex b\nedge a b 2\nedge b a 2\n")
    assert g.edges == ((0, 1, 2),)


def test_constructor_validation():
    with pytest.raises(GraphError):
        DefiningGraph(("a", "b"), ((1, 2), (3, 1)))
    with pytest.raises(GraphError):
        DefiningGraph(("a", "b"), ((1, 2), (2, 2)))
    with pytest.raises(GraphError):
        DefiningGraph(("a",), ((1, 2),))
    with pytest.raises(GraphError):
        DefiningGraph(("a", "a"), ((1, 2), (2, 1)))
    with pytest.raises(GraphError):
        DefiningGraph(("a b",), ((1,),))
    with pytest.raises(GraphError):
        DefiningGraph(("a", "b"), ((1, 2.5), (2.5, 1)))


def test_star_link_components(load):
    g = load("delta")
    assert star(g, "a") == (0, 1)
    assert link(g, "c") == ()
    assert connected_components(g) == [(0, 1), (2,)]
    assert is_separating(g, ())
    p4 = load("p4")
    assert connected_components(p4, ["b"]) == [(0,), (2, 3)]
    assert is_separating(p4, ["b"])
    assert not is_separating(p4, ["a"])
    with pytest.raises(GraphError):
        is_separating(p4, "abcd")


def test_induced_and_complement(load):
    g = load("p4")
    sub = induced_subgraph(g, ["c", "a", "b"])
    assert sub.vertices == ("a", "b", "c")
    assert sub.edges == ((0, 1, 2), (1, 2, 2))
    comp = complement(g)
    assert {(i, j) for i, j, _ in comp.edges} == {(0, 2), (0, 3), (1, 3)}
    assert complement(comp).weights == g.weights
    with pytest.raises(GraphError):
        complement(load("dihedral3"))


def test_text_and_json_round_trip(load):
    for name in ["h3", "one_ended", "delta"]:
        g = load(name)
        assert parse_graph(g.to_text()) == g
        assert DefiningGraph.from_json(g.to_json()) == g


def test_words_parse_and_format(load):
    g = load("k2")
    assert g.parse_word("") == ()
    assert g.parse_word("ε") == ()
    assert g.parse_word("a b a") == (0, 1, 0)
    assert g.format_word((1, 0)) == "b a"
    with pytest.raises(GraphError):
        g.parse_word("a z")
