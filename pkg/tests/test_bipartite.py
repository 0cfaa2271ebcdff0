import pytest

from factories import complete_bipartite, complete_graph, cycle_graph, inst, path_graph, star_graph
from mscb.bipartite import (
    ComponentSides,
    NotBipartiteError,
    bipartite_sides,
    solve_bipartite_three_uniform,
    solve_bipartite_two,
)
from mscb.core import Graph, UnsupportedInstanceError


def test_sides_c4():
    assert bipartite_sides(cycle_graph(4)) == [ComponentSides((0, 2), (1, 3))]


def test_sides_edgeless():
    sides = bipartite_sides(Graph(3))
    assert sides == [ComponentSides((0,), ()), ComponentSides((1,), ()), ComponentSides((2,), ())]
    assert all(s.edgeless for s in sides)


def test_sides_p3():
    assert bipartite_sides(path_graph(3)) == [ComponentSides((0, 2), (1,))]


def test_sides_odd_cycle():
    with pytest.raises(NotBipartiteError):
        bipartite_sides(cycle_graph(5))


def test_two_c4():
    r = solve_bipartite_two(inst(cycle_graph(4), [(1, [0, 2]), (1, [1, 3])]))
    assert r.cost == 3 and r.bundle_maxes == (1, 2)


def test_two_k33_weighted():
    r = solve_bipartite_two(inst(complete_bipartite(3, 3), [(5, [0, 1, 2]), (1, [3, 4, 5])]))
    assert r.cost == 7


def test_two_single_edge():
    assert solve_bipartite_two(inst(path_graph(2), [(1, [0]), (1, [1])])).cost == 3


def test_two_forcing_needs_color_three():
    # both endpoints of 1-2 sit in the cheap bundle's complement
    g = path_graph(4)
    i = inst(g, [(10, [0, 3]), (1, [1, 2])])
    r = solve_bipartite_two(i)
    assert r.cost == 13 and r.bundle_maxes == (1, 3)


def test_two_rejects():
    with pytest.raises(UnsupportedInstanceError):
        solve_bipartite_two(inst(path_graph(3), [(1, [0]), (1, [1]), (1, [2])]))
    with pytest.raises(NotBipartiteError):
        solve_bipartite_two(inst(complete_graph(3), [(1, range(3))]))


def test_three_star():
    r = solve_bipartite_three_uniform(inst(star_graph(2), [(1, [0]), (1, [1]), (1, [2])]))
    assert r.cost == 4 and r.coloring == (2, 1, 1)


def test_three_edgeless():
    assert solve_bipartite_three_uniform(inst(Graph(3), [(1, [0]), (1, [1]), (1, [2])])).cost == 3


def test_three_c4():
    r = solve_bipartite_three_uniform(inst(cycle_graph(4), [(1, [0]), (1, [2]), (1, [1, 3])]))
    assert r.cost == 4


def test_three_rejects():
    with pytest.raises(UnsupportedInstanceError):
        solve_bipartite_three_uniform(inst(path_graph(2), [(1, [0]), (2, [1])]))
    with pytest.raises(UnsupportedInstanceError):
        solve_bipartite_three_uniform(inst(path_graph(4), [(1, [i]) for i in range(4)]))
