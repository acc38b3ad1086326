import pytest

from alldiff import (AllDifferent, Infeasible, Level, Ordering, Problem, compare_stores,
                     is_solution, propagate, solve)
from alldiff.generators import nqueens, speeches
from alldiff.oracle import oracle_filter
from helpers import store, two_values_three_vars


def test_propagate_shrinks_schedule():
    p = speeches()
    out = propagate(p, Level.HYPER_ARC)
    assert compare_stores(out, p.domains) is Ordering.SMALLER
    assert out == oracle_filter(p.constraints[0], p.domains, Level.HYPER_ARC)


def test_propagate_without_constraints():
    p = Problem(store({1, 2}, {1}))
    assert propagate(p, Level.HYPER_ARC) is p.domains


def test_propagate_range_leaves_two_value_example():
    p = two_values_three_vars()
    assert propagate(p, Level.RANGE) == p.domains


def test_propagate_reports_constraint():
    p = Problem(store({1}, {1}, {1, 2}),
                (AllDifferent((1, 2)), AllDifferent((0, 1))))
    with pytest.raises(Infeasible) as info:
        propagate(p, Level.BOUND)
    assert info.value.constraint == 1


def test_propagate_empty_domain():
    p = Problem(store(set(), {1}), (AllDifferent((0, 1)),))
    with pytest.raises(Infeasible):
        propagate(p, Level.DECOMP)


def test_propagate_chains_constraints():
    # x0 = 1 forces x1 = 2 through the first constraint, then x2 = 3
    p = Problem(store({1}, {1, 2}, {2, 3}),
                (AllDifferent((1, 2)), AllDifferent((0, 1))))
    for level in Level:
        assert [d.values for d in propagate(p, level)] == [(1,), (2,), (3,)]


@pytest.mark.parametrize("level", list(Level))
def test_solve_schedule(level):
    p = speeches()
    sol, stats = solve(p, level)
    assert sol == (6, 3, 5, 2, 4, 1)
    assert is_solution(p.constraints[0], sol)
    assert stats.nodes_explored >= 1


@pytest.mark.parametrize("level", list(Level))
def test_solve_infeasible(level):
    sol, stats = solve(two_values_three_vars(), level)
    assert sol is None
    count, _ = solve(two_values_three_vars(), level, "count")
    assert count == 0
    assert stats.failures >= 1


@pytest.mark.parametrize("level", list(Level))
def test_count_queens(level):
    count, stats = solve(nqueens(6), level, "count")
    assert count == 4
    assert stats.wall_time >= 0


def test_stats_dict():
    _, stats = solve(speeches(), Level.BOUND, "count")
    assert set(stats.as_dict()) == {"nodes", "failures", "prunings", "wall_time"}


def test_bad_mode():
    with pytest.raises(ValueError):
        solve(speeches(), Level.BOUND, "all")
