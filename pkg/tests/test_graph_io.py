import pytest

from core.errors import GraphError, GraphFormatError
from core.graph import Graph, build_family
from core.graph_io import load_graph, read_graph, save_graph, write_graph


def test_read_with_comments_and_blank_lines():
    text = """
    # a path on four vertices
    4

    0 1   # first edge
    2 1
    2 3
    """
    assert read_graph(text) == build_family("path", [4])


def test_empty_graph_document():
    assert read_graph("0\n") == Graph(0, frozenset())
    assert read_graph("3") == build_family("empty", [3])


def test_write_is_canonical():
    g = Graph.from_edges(4, [(3, 2), (1, 0)])
    assert write_graph(g) == "4\n0 1\n2 3\n"


def test_reversed_edge_is_read_and_written_strict():
    g = read_graph("2\n1 0\n")
    assert g == Graph.from_edges(2, [(0, 1)])
    assert write_graph(g) == "2\n0 1\n"
    for line in write_graph(build_family("cycle", [5])).splitlines()[1:]:
        u, v = map(int, line.split())
        assert 0 <= u < v < 5


@pytest.mark.parametrize(
    "text, lineno, fragment",
    [
        ("", 1, "missing vertex count"),
        ("x\n", 1, "not an integer"),
        ("3 3\n", 1, "single vertex count"),
        ("-2\n", 1, "non-negative"),
        ("3\n0 1\n1 2 0\n", 3, "expected 'u v'"),
        ("3\n0 a\n", 2, "not an integer"),
        ("3\n1 1\n", 2, "self-loop"),
        ("3\n0 3\n", 2, "out of range"),
        ("3\n0 1\n\n1 0\n", 4, "already declared on line 2"),
    ],
)
def test_format_errors_carry_line_numbers(text, lineno, fragment):
    with pytest.raises(GraphFormatError) as info:
        read_graph(text)
    assert info.value.lineno == lineno
    assert fragment in str(info.value)
    assert str(info.value).startswith(f"line {lineno}: ")


def test_format_error_is_a_graph_error():
    with pytest.raises(GraphError):
        read_graph("2\n0 0\n")


def test_save_and_load(tmp_path):
    path = tmp_path / "petersen.txt"
    petersen = build_family("petersen")
    save_graph(petersen, str(path))
    assert path.read_text().splitlines()[0] == "10"
    assert load_graph(str(path)) == petersen
