import json

import pytest

from convexcuts.errors import FileFormatError, GraphError
from convexcuts.fileio import (
    cut_record,
    format_dot,
    format_json_report,
    format_text_report,
    parse_graph_file,
    parse_graph_text,
    serialize_graph,
    write_graph_file,
)
from convexcuts.generators import FAMILIES, cycle, generate, grid, random_plane
from convexcuts.graph import Graph

C4 = """# a square
graph 4 4
edge 0 0 1
edge 1 1 2   # trailing comment
edge 2 2 3
edge 3 3 0
"""


def test_parse_plain():
    g, emb = parse_graph_text(C4)
    assert g == Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert emb is None


def test_parse_with_rotation_and_outer():
    text = serialize_graph(grid(2, 3).graph, grid(2, 3).embedding)
    g, emb = parse_graph_text(text)
    assert emb.rotation == grid(2, 3).embedding.rotation
    assert emb.faces[emb.outer_face].edge_ids == grid(2, 3).embedding.faces[grid(2, 3).embedding.outer_face].edge_ids


def test_edge_lines_may_come_in_any_order():
    lines = C4.splitlines()
    shuffled = "\n".join(lines[:2] + lines[2:][::-1])
    assert parse_graph_text(shuffled)[0] == parse_graph_text(C4)[0]


@pytest.mark.parametrize("text,line,msg", [
    ("edge 0 0 1\n", 1, "header"),
    ("graph 2 1\nedge 0 0 x\n", 2, "integers"),
    ("graph 2 1\nedge 0 0 1\nedge 0 0 1\n", 3, "repeated"),
    ("graph 2 1\nedge 4 0 1\n", 2, "outside"),
    ("graph 2 1\nedge 0 0 1\nfoo 1\n", 3, "unknown"),
    ("graph 2 1\ngraph 2 1\n", 2, "second"),
    ("graph 3 3\nedge 0 0 1\nedge 1 1 2\nedge 2 2 0\nrot 0 0 2\n", 5, "missing"),
    ("graph 3 3\nedge 0 0 1\nedge 1 1 2\nedge 2 2 0\nouter 0 1 2\n", 5, "without rotation"),
    ("graph 3 3\nedge 0 0 1\nedge 1 1 2\nedge 2 2 0\nrot 0 0 2\nrot 1 1 0\nrot 2 2 1\nouter 0 1\n", 8, "no face"),
])
def test_errors_carry_line_numbers(text, line, msg):
    with pytest.raises(FileFormatError, match=msg) as info:
        parse_graph_text(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")


def test_graph_errors_become_format_errors():
    with pytest.raises(FileFormatError, match="self-loop"):
        parse_graph_text("graph 2 2\nedge 0 0 1\nedge 1 1 1\n")
    with pytest.raises(FileFormatError, match="missing ids"):
        parse_graph_text("graph 2 2\nedge 0 0 1\n")
    with pytest.raises(FileFormatError, match="empty"):
        parse_graph_text("# nothing\n")


def test_file_round_trip(tmp_path):
    gen = random_plane(9, 2)
    path = tmp_path / "g.txt"
    write_graph_file(path, gen.graph, gen.embedding)
    g, emb = parse_graph_file(path)
    assert serialize_graph(g, emb) == path.read_text()


def test_every_family_round_trips():
    params = {"cycle": (5,), "path": (4,), "grid": (2, 3), "hypercube": (2,), "complete": (3,), "wheel": (4,),
              "complete_bipartite": (2, 2), "random": (6, 8, 0), "random_bipartite": (3, 3, 6, 0),
              "random_plane": (7, 1), "diamond": ()}
    for family in FAMILIES:
        gen = generate(family, *params[family])
        text = serialize_graph(gen.graph, gen.embedding)
        assert serialize_graph(*parse_graph_text(text)) == text


def test_generate_errors():
    with pytest.raises(GraphError, match="unknown family"):
        generate("torus", 3)
    with pytest.raises(GraphError, match="takes 2"):
        generate("grid", 3)


def _records():
    g = cycle(6).graph
    return g, [cut_record("bipartite", [2, 5], ((0, 1, 2), (3, 4, 5)), "verified"),
               cut_record("bipartite", [0, 3], ((0, 4, 5), (1, 2, 3)), "verified")]


def test_text_report_sorted():
    g, recs = _records()
    out = format_text_report("bipartite", g, recs).splitlines()
    assert out[0] == "# bipartite: 6 vertices, 6 edges, 2 cuts"
    assert out[1] == "cut bipartite edges=0,3 side0=0,4,5 side1=1,2,3 status=verified"


def test_json_report_stable():
    g, recs = _records()
    a = format_json_report("bipartite", g, recs)
    b = format_json_report("bipartite", g, list(reversed(recs)))
    assert a == b
    assert json.loads(a)["cuts"][0]["edges"] == [0, 3]


def test_dot_blocks():
    g, recs = _records()
    out = format_dot(g, recs)
    assert out.count("graph cut_") == 2
    assert out.count("color=red") == 4
    assert format_dot(g, []) == ""
