import pytest

from factories import complete_graph, cycle_graph, inst, path_graph, petersen_graph
from mscb.core import Graph, InconclusiveError, InfeasibleError
from mscb.oracle import (
    OracleConfig,
    chromatic_number,
    enumerate_optimal,
    k_coloring,
    list_coloring_feasible,
    max_independent_set,
    solve_bruteforce,
)


def test_k3_single_bundle():
    assert solve_bruteforce(inst(complete_graph(3), [(1, [0, 1, 2])])).cost == 3


def test_p3_two_bundles():
    r = solve_bruteforce(inst(path_graph(3), [(1, [0, 2]), (1, [1])]))
    assert r.cost == 3 and r.coloring == (1, 2, 1)


def test_single_edge():
    r = solve_bruteforce(inst(path_graph(2), [(1, [0]), (1, [1])]))
    assert r.cost == 3 and sorted(r.coloring) == [1, 2]


def test_witness_is_lexicographically_smallest():
    r = solve_bruteforce(inst(path_graph(2), [(1, [0]), (1, [1])]))
    assert r.coloring == (1, 2)


def test_node_limit_is_inconclusive():
    i = inst(petersen_graph(), [(1, list(range(10)))])
    with pytest.raises(InconclusiveError):
        solve_bruteforce(i, OracleConfig(node_limit=3))


def test_cap_zero_is_rejected():
    with pytest.raises(ValueError):
        OracleConfig(color_cap=0)


def test_cap_below_chromatic_number_is_infeasible():
    i = inst(complete_graph(3), [(1, [0, 1, 2])])
    with pytest.raises(InfeasibleError):
        solve_bruteforce(i, OracleConfig(color_cap=2, per_vertex_cap=False))


def test_enumerate_single_vertex():
    assert enumerate_optimal(inst(Graph(1), [(1, [0])]), 2) == [(1,)]


def test_enumerate_single_edge():
    assert sorted(enumerate_optimal(inst(path_graph(2), [(1, [0]), (1, [1])]), 2)) == [(1, 2), (2, 1)]


def test_enumerate_p3():
    got = set(enumerate_optimal(inst(path_graph(3), [(1, [0, 2]), (1, [1])]), 2))
    assert got == {(1, 2, 1), (2, 1, 2)}


@pytest.mark.parametrize(
    "graph, alpha", [(complete_graph(3), 1), (path_graph(4), 2), (petersen_graph(), 4)]
)
def test_max_independent_set(graph, alpha):
    size, witness = max_independent_set(graph)
    assert size == alpha == len(witness)
    assert graph.induced_is_independent(witness)


def test_list_coloring():
    edge = path_graph(2)
    assert list_coloring_feasible(edge, [(1,), (2,)]) == (1, 2)
    assert list_coloring_feasible(edge, [(1,), (1,)]) is None
    assert list_coloring_feasible(edge, [(), (1,)]) is None
    assert list_coloring_feasible(cycle_graph(4), [(1, 2)] * 4) == (1, 2, 1, 2)


@pytest.mark.parametrize(
    "graph, chi",
    [(Graph(3), 1), (path_graph(5), 2), (Graph(4, ((0, 1), (0, 2), (0, 3))), 2),
     (complete_graph(4), 4), (petersen_graph(), 3), (cycle_graph(5), 3)],
)
def test_chromatic_number(graph, chi):
    assert chromatic_number(graph) == chi
    assert k_coloring(graph, chi) is not None
    if chi > 1:
        assert k_coloring(graph, chi - 1) is None
