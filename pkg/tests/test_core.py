import pytest

from factories import cycle_graph, inst, path_graph
from mscb.core import (
    Graph,
    Instance,
    InvalidColoringError,
    SolveResult,
    bundle_max,
    classify,
    cost,
    decide,
    greedy_coloring,
    is_proper,
    make_result,
    validate_instance,
    verify_result,
)
from mscb.reductions import reduce_is_to_matching
from factories import complete_graph


def test_graph_normalizes_edges():
    g = Graph(3, ((2, 1), (0, 1)))
    assert g.edges == ((0, 1), (1, 2))
    assert g.adjacency == ((1,), (0, 2), (1,))
    assert g.degree(1) == 2 and g.max_degree == 2


def test_components_and_two_coloring():
    g = Graph(5, ((0, 1), (3, 4)))
    assert g.components() == [[0, 1], [2], [3, 4]]
    assert g.two_coloring() is not None
    assert complete_graph(3).two_coloring() is None


def test_validate_accepts_p3():
    assert validate_instance(inst(path_graph(3), [(1, [0, 1]), (1, [2])])) == []


def test_validate_reports_self_loop():
    bad = Instance.build(2, [(0, 0)], [(1, [0, 1])])
    assert validate_instance(bad) == ["self-loop at vertex 0"]


def test_validate_reports_uncovered_vertex():
    bad = inst(path_graph(3), [(1, [0, 1])])
    assert validate_instance(bad) == ["uncovered vertex 2"]


def test_validate_reports_several_problems():
    bad = Instance.build(2, [(0, 1), (1, 0)], [(0, [0, 1])], budget=0)
    problems = validate_instance(bad)
    assert "duplicate edge (0,1)" in problems
    assert any("non-positive weight" in p for p in problems)
    assert "non-positive budget 0" in problems


@pytest.mark.parametrize(
    "graph, bundles, colors, expected",
    [
        (path_graph(2), [(1, [0]), (1, [1])], (1, 2), 3),
        (Graph(1), [(5, [0])], (1,), 5),
        (path_graph(4), [(1, [0, 1]), (1, [2, 3])], (1, 2, 1, 2), 4),
    ],
)
def test_cost_examples(graph, bundles, colors, expected):
    assert cost(inst(graph, bundles), colors) == expected


def test_cost_rejects_improper_and_partial():
    i = inst(path_graph(2), [(1, [0]), (1, [1])])
    with pytest.raises(InvalidColoringError):
        cost(i, (1, 1))
    with pytest.raises(InvalidColoringError):
        cost(i, (0, 1))
    with pytest.raises(InvalidColoringError):
        cost(i, (1,))


def test_partial_colorings_are_proper_on_their_support():
    g = path_graph(3)
    assert not is_proper(g, (1, 0, 1))
    from mscb.core import check_coloring

    check_coloring(g, (1, 0, 1), partial=True)


def test_bundle_max_examples():
    i = inst(path_graph(3), [(1, [0, 2]), (1, [1]), (1, [0, 1, 2])])
    assert bundle_max(i, (1, 2, 1), 0) == 1
    assert bundle_max(i, (1, 2, 1), 1) == 2
    assert bundle_max(i, (1, 2, 3), 2) == 3
    with pytest.raises(IndexError):
        bundle_max(i, (1, 2, 1), 3)


@pytest.mark.parametrize("value, budget, expected", [(5, 5, True), (14, 15, True), (3, 2, False)])
def test_decide(value, budget, expected):
    i = Instance.build(1, [], [(1, [0])], budget)
    assert decide(i, SolveResult(value, (1,), (1,), "x")) is expected


def test_decide_needs_budget_and_optimality():
    i = Instance.build(1, [], [(1, [0])])
    with pytest.raises(ValueError):
        decide(i, SolveResult(1, (1,), (1,), "x"))
    j = Instance.build(1, [], [(1, [0])], 3)
    with pytest.raises(ValueError):
        decide(j, SolveResult(1, (1,), (1,), "x", optimal=False))


def test_classify_p4_partition():
    c = classify(inst(path_graph(4), [(1, [0, 1]), (1, [2, 3])]))
    assert c.is_path and c.is_tree and c.bundles_partition and c.bundles_connected
    assert c.non_singleton_count == 2


def test_classify_matching_from_k3():
    target, _ = reduce_is_to_matching(complete_graph(3), 1)
    c = classify(target)
    assert c.is_perfect_matching and c.bundles_independent and c.bundles_partition


def test_classify_c4():
    c = classify(inst(cycle_graph(4), [(1, [0, 2]), (1, [1, 3])]))
    assert c.is_bipartite and not c.is_tree and c.bundles_independent
    assert not c.bundles_connected


def test_make_and_verify_result():
    i = inst(path_graph(4), [(1, [0, 1]), (1, [2, 3])])
    r = make_result(i, [2, 1, 2, 1], "hand")
    assert r.cost == 4 and r.bundle_maxes == (2, 2)
    verify_result(i, r)
    with pytest.raises(InvalidColoringError):
        verify_result(i, SolveResult(3, r.coloring, r.bundle_maxes, "hand"))
    assert r.to_dict()["coloring"] == [2, 1, 2, 1]


def test_greedy_respects_degree_bound():
    g = complete_graph(4)
    colors = greedy_coloring(g)
    assert is_proper(g, colors)
    assert all(c <= g.degree(v) + 1 for v, c in enumerate(colors))
