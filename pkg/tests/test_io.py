import json
from pathlib import Path

import pytest

from factories import inst, path_graph
from mscb import io as mio
from mscb.core import Graph
from mscb.dispatch import dispatch
from mscb.reductions import ListColoringInstance

GOLDEN = Path(__file__).parent / "golden"
EXPECTED = {
    "p4_connected": 4,
    "k33_weighted": 7,
    "edge_budget": 3,
    "p5_intervals": 6,
    "star_connected": 4,
    "k3_matching": 5,
    "petersen_three": 13,
    "commented": 3,
}


def test_parse_single_edge():
    i = mio.parse("mscb 1\nn 2\ne 0 1\nb 1 0\nb 1 1\nc 3\n")
    assert i.graph.edges == ((0, 1),)
    assert [b.members for b in i.bundles] == [(0,), (1,)]
    assert i.budget == 3


def test_emit_is_canonical():
    text = "mscb 1\nn 3\ne 2 1\ne 1 0\nb 4 2 0 1\n"
    assert mio.canonical(text) == "mscb 1\nn 3\ne 0 1\ne 1 2\nb 4 0 1 2\n"


def test_comments_and_blank_lines():
    i = mio.parse("# lead\n\nmscb 1  # magic\nn 1\n   \nb 2 0 # only bundle\n")
    assert i.n == 1 and i.weights == (2,)


@pytest.mark.parametrize(
    "text, reason, line, column",
    [
        ("mscb 1\nn 2\nx 0\n", "unknown directive 'x'", 3, 1),
        ("mscb 1\nn 2\ne 0 2\n", "vertex out of range: 2 not in [0,2)", 3, 5),
        ("mscb 1\nn 2\nb 1\n", "empty bundle", 3, 1),
        ("mscb 1\nn 2\nb 0 0\n", "non-positive weight 0", 3, 3),
        ("mscb 1\nn 2\ne 0 a\n", "expected an integer, got 'a'", 3, 5),
        ("n 2\n", "missing 'mscb <version>' header", 1, 1),
        ("mscb 2\nn 1\n", "unsupported version '2'", 1, 6),
        ("mscb 1\nb 1 0\n", "vertex before the 'n' line", 2, 5),
        ("mscb 1\nn 1\nn 1\n", "duplicate 'n' line", 3, 1),
        ("mscb 1\n", "missing 'n' line", 1, 1),
        ("", "empty document", 1, 1),
        ("mscb 1\nn 1\nb 1 0\nc 0\n", "non-positive budget 0", 4, 3),
    ],
)
def test_parse_errors(text, reason, line, column):
    with pytest.raises(mio.ParseError) as err:
        mio.parse(text)
    assert (err.value.reason, err.value.line, err.value.column) == (reason, line, column)
    assert str(err.value).startswith(f"line {line}, column {column}:")


def test_list_lines_only_in_list_documents():
    text = "mscb 1\nn 2\ne 0 1\nl 0 1\nl 1 2 3\n"
    lc = mio.parse_list_coloring(text)
    assert lc.lists == ((1,), (2, 3))
    assert mio.emit_list_coloring(lc) == text
    with pytest.raises(mio.ParseError, match="unknown directive 'l'"):
        mio.parse(text)
    with pytest.raises(mio.ParseError, match="no 'l' line for vertex 1"):
        mio.parse_list_coloring("mscb 1\nn 2\nl 0 1\n")
    with pytest.raises(mio.ParseError, match="list color 4"):
        mio.parse_list_coloring("mscb 1\nn 1\nl 0 4\n")


def test_result_line_and_json():
    r = dispatch(inst(path_graph(2), [(1, [0]), (1, [1])]))
    colors = ",".join(map(str, r.coloring))
    assert mio.result_line(r) == f"cost=3 solver={r.solver} colors={colors}"
    doc = json.loads(mio.result_json(r))
    assert set(doc) == {"cost", "coloring", "bundle_maxes", "solver", "optimal", "stats"}
    assert doc["cost"] == 3 and sorted(doc["bundle_maxes"]) == [1, 2]


def test_emit_with_comments_parses_back(tmp_path):
    i = inst(Graph(3, ((0, 2),)), [(2, [0, 1]), (1, [2])], 6)
    path = tmp_path / "x.mscb"
    mio.write_instance(i, path, comments=["note"])
    assert mio.read_instance(path) == i


@pytest.mark.parametrize("path", sorted(GOLDEN.glob("*.mscb")), ids=lambda p: p.stem)
def test_golden_round_trip(path):
    text = path.read_text(encoding="utf-8")
    canon = mio.canonical(text)
    assert mio.emit(mio.parse(text)) == canon
    assert mio.emit(mio.parse(canon)) == canon
    assert dispatch(mio.parse(text)).cost == EXPECTED[path.stem]


def test_list_instance_round_trip():
    lc = ListColoringInstance(path_graph(3), ((1, 2), (3,), (1, 2, 3)))
    assert mio.parse_list_coloring(mio.emit_list_coloring(lc)) == lc
