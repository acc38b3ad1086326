import pytest

from alldiff import (AllDifferent, Matching, ValueGraph, build_value_graph, dump_value_graph,
                     mark_removable_edges, maximum_matching)
from alldiff.generators import revised_speeches
from alldiff.oracle import enumerate_maximum_matchings
from alldiff.regin import METHODS
from helpers import store, two_values_three_vars


def test_value_graph_of_revised_schedule():
    p = revised_speeches()
    g = build_value_graph(p.constraints[0], p.domains)
    assert len(g.var_nodes) == 4
    assert g.val_nodes == (2, 3, 4, 5, 6)
    assert g.num_edges == 12


def test_value_graph_single_edge():
    g = build_value_graph(AllDifferent((0,)), store({7}))
    assert (len(g.var_nodes), len(g.val_nodes), g.num_edges) == (1, 1, 1)


def test_value_graph_two_values():
    p = two_values_three_vars()
    g = build_value_graph(p.constraints[0], p.domains)
    assert (len(g.var_nodes), len(g.val_nodes), g.num_edges) == (3, 2, 6)


@pytest.mark.parametrize("method", METHODS)
def test_matching_covers_speakers(method):
    p = revised_speeches()
    m = maximum_matching(build_value_graph(p.constraints[0], p.domains), method)
    assert len(m) == 4 and m.covers_all_variables()
    assert len(m.covered_vals) == 4


@pytest.mark.parametrize("method", METHODS)
def test_matching_deficit(method):
    p = two_values_three_vars()
    m = maximum_matching(build_value_graph(p.constraints[0], p.domains), method)
    assert len(m) == 2


@pytest.mark.parametrize("method", METHODS)
def test_matching_empty_graph(method):
    g = ValueGraph((0, 1), ((), ()))
    assert len(maximum_matching(g, method)) == 0


def test_removable_edges_of_revised_schedule():
    p = revised_speeches()
    g = build_value_graph(p.constraints[0], p.domains)
    removable = mark_removable_edges(g, maximum_matching(g))
    assert removable == {(0, 3), (0, 4), (2, 3), (2, 4)}


def test_complete_two_by_two():
    g = ValueGraph((0, 1), ((1, 2), (1, 2)))
    assert mark_removable_edges(g, maximum_matching(g)) == frozenset()
    assert len(enumerate_maximum_matchings(g)) == 2


def test_star():
    g = ValueGraph((0,), ((1, 2, 3),))
    assert mark_removable_edges(g, maximum_matching(g)) == frozenset()


def test_precondition_violations():
    g = ValueGraph((0, 1), ((1, 2), (1, 2)))
    with pytest.raises(ValueError):
        mark_removable_edges(g, Matching(g, (1, None)))
    with pytest.raises(ValueError):
        mark_removable_edges(g, Matching(g, (1, 1)))
    with pytest.raises(ValueError):
        mark_removable_edges(g, Matching(ValueGraph((0, 1), ((1,), (2,))), (1, 2)))


def test_dump_format():
    p = revised_speeches()
    g = build_value_graph(p.constraints[0], p.domains)
    m = maximum_matching(g)
    lines = dump_value_graph(g, m, p.names).splitlines()
    assert len(lines) == 4
    for line, own, vals in zip(lines, m.mate, g.adj):
        head, rest = line.split(" | ")
        assert head.endswith(f": {own}")
        assert sorted(map(int, rest.split())) == [d for d in vals if d != own]
    assert dump_value_graph(ValueGraph((0,), ((5,),))) == "x0: - | 5\n"
