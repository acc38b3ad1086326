"""Worked instances for each single-constraint filter."""

import pytest

from alldiff import (AllDifferent, Disequality, Infeasible, Level, Overflow, ac_filter,
                     bc_filter, decomp_filter, decompose, find_hall_intervals,
                     find_hall_sets, gac_filter, rc_filter)
from alldiff.oracle import is_consistent
from helpers import hall_interval_example, hole_example, staircase, store, two_values_three_vars


def doms(s):
    return [set(d) for d in s]


class TestDecompose:
    def test_arity_four(self):
        pairs = [(d.a, d.b) for d in decompose(AllDifferent((0, 1, 2, 3)))]
        assert pairs == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]

    def test_arity_one(self):
        assert decompose(AllDifferent((4,))) == []

    def test_arity_six(self):
        assert len(decompose(AllDifferent(tuple(range(6))))) == 15

    def test_canonical_order_with_offsets(self):
        # x2 + 0 != x0 + 3  <=>  x0 != x2 - 3
        assert decompose(AllDifferent((2, 0), (0, 3))) == [Disequality(0, 2, -3)]


class TestDecompAC:
    def test_no_singleton_no_change(self):
        p = hall_interval_example()
        s = store({1, 2}, {1, 2}, {1, 2, 3})
        assert decomp_filter(p.constraints[0], s) is s

    def test_singleton_removal(self):
        out = ac_filter([Disequality(0, 1)], store({2}, {1, 2, 3}))
        assert doms(out) == [{2}, {1, 3}]

    def test_clash(self):
        with pytest.raises(Infeasible) as info:
            ac_filter([Disequality(0, 1)], store({1}, {1}))
        assert info.value.variable in (0, 1)

    def test_chain_of_singletons(self):
        c = AllDifferent((0, 1, 2))
        assert doms(decomp_filter(c, store({1}, {1, 2}, {1, 2, 3}))) == [{1}, {2}, {3}]

    def test_shifted(self):
        # x0 != x1 + 1 with x0 = 3 removes 2 from x1
        out = ac_filter([Disequality(0, 1, 1)], store({3}, {1, 2, 3}))
        assert doms(out) == [{3}, {1, 3}]

    def test_staircase_unchanged(self):
        for n in range(3, 9):
            p = staircase(n)
            assert decomp_filter(p.constraints[0], p.domains) == p.domains


class TestBounds:
    def test_hall_interval(self):
        p = hall_interval_example()
        found = find_hall_intervals(p.constraints[0], p.domains)
        # [1,3] holding all three variables is a Hall interval as well
        assert [(h.lo, h.hi, set(h.members)) for h in found] == [(1, 2, {0, 1}), (1, 3, {0, 1, 2})]
        assert all(h.width == len(h.members) for h in found)

    def test_two_value_domains_form_a_hall_interval(self):
        p = two_values_three_vars()
        found = find_hall_intervals(p.constraints[0], p.domains)
        assert [(h.lo, h.hi, set(h.members)) for h in found] == [(1, 3, {0, 1, 2})]

    def test_overflow_witness(self):
        p = store({1, 2}, {1, 2}, {1, 2})
        with pytest.raises(Infeasible) as info:
            find_hall_intervals(AllDifferent((0, 1, 2)), p)
        assert info.value.witness == Overflow(1, 2, frozenset({0, 1, 2}))

    def test_filter_fixes_third(self):
        p = hall_interval_example()
        out = bc_filter(p.constraints[0], p.domains)
        assert doms(out) == [{1, 2}, {1, 2}, {3}]
        assert is_consistent(p.constraints[0], out, Level.BOUND)

    def test_hole_example_unchanged(self):
        p = hole_example()
        assert bc_filter(p.constraints[0], p.domains) is p.domains

    def test_pigeonhole(self):
        with pytest.raises(Infeasible):
            bc_filter(AllDifferent((0, 1, 2)), store({1, 2}, {1, 2}, {1, 2}))

    def test_only_bounds_are_deleted(self):
        # [1,2] is a Hall interval; x2's interior value 2 is not a bound
        c = AllDifferent((0, 1, 2))
        out = bc_filter(c, store({1, 2}, {1, 2}, {1, 2, 3, 4}))
        assert doms(out) == [{1, 2}, {1, 2}, {3, 4}]
        out = bc_filter(c, store({1, 2}, {1, 2}, {0, 2, 5}))
        assert doms(out)[2] == {0, 2, 5}

    def test_witness_maps_to_variables(self):
        c = AllDifferent((4, 2, 0))
        s = store({1}, {9}, {1}, {9}, {1})
        with pytest.raises(Infeasible) as info:
            bc_filter(c, s)
        assert info.value.witness.members <= {0, 2, 4}

    def test_extreme_values(self):
        big = 2**63 - 1
        c = AllDifferent((0, 1))
        out = bc_filter(c, store({-big - 1, big}, {big}))
        assert doms(out) == [{-big - 1}, {big}]


class TestRanges:
    def test_hole_example(self):
        p = hole_example()
        assert doms(rc_filter(p.constraints[0], p.domains)) == [{1, 3}, {2}, {1, 3}]

    def test_hall_sets_of_hole_example(self):
        p = hole_example()
        sets = find_hall_sets(p.constraints[0], p.domains)
        assert all(s.hi - s.lo + 1 == len(s.members) for s in sets)
        assert any(s.members == {1} for s in sets)

    def test_two_value_domains_pass(self):
        p = two_values_three_vars()
        assert rc_filter(p.constraints[0], p.domains) is p.domains

    def test_hall_interval_example(self):
        p = hall_interval_example()
        assert doms(rc_filter(p.constraints[0], p.domains)) == [{1, 2}, {1, 2}, {3}]

    def test_removes_interior_values(self):
        c = AllDifferent((0, 1, 2))
        out = rc_filter(c, store({1, 2}, {1, 2}, {0, 2, 5}))
        assert doms(out)[2] == {0, 5}

    def test_empties_domain(self):
        with pytest.raises(Infeasible) as info:
            rc_filter(AllDifferent((0, 1, 2)), store({1, 2}, {1, 2}, {2}))
        assert info.value.variable is not None or info.value.witness is not None


class TestRegin:
    def test_hole_example(self):
        p = hole_example()
        out = gac_filter(p.constraints[0], p.domains)
        assert doms(out) == [{1, 3}, {2}, {1, 3}]

    def test_two_value_domains_infeasible(self):
        p = two_values_three_vars()
        with pytest.raises(Infeasible) as info:
            gac_filter(p.constraints[0], p.domains)
        assert sorted(info.value.witness) == [0, 1, 2]

    @pytest.mark.parametrize("n", range(3, 9))
    def test_staircase(self, n):
        p = staircase(n)
        out = gac_filter(p.constraints[0], p.domains)
        assert out[n - 1].values == (n,)
        assert all(out[i] == p.domains[i] for i in range(n - 1))

    @pytest.mark.parametrize("method", ["hopcroft-karp", "augmenting"])
    def test_methods(self, method):
        p = hole_example()
        assert doms(gac_filter(p.constraints[0], p.domains, method)) == [{1, 3}, {2}, {1, 3}]

    def test_unknown_method(self):
        p = hole_example()
        with pytest.raises(ValueError):
            gac_filter(p.constraints[0], p.domains, "simplex")

    def test_empty_domain(self):
        with pytest.raises(Infeasible):
            gac_filter(AllDifferent((0, 1)), store(set(), {1}))

    def test_sparse_values(self):
        # values far apart take the np.unique path
        big = 10**15
        c = AllDifferent((0, 1, 2))
        out = gac_filter(c, store({-big, big}, {-big, big}, {-big, 0, big}))
        assert doms(out) == [{-big, big}, {-big, big}, {0}]

    def test_offsets(self):
        # x0 + 0, x1 + 1: x1 = 1 takes position value 2, so x0 != 2
        c = AllDifferent((0, 1), (0, 1))
        out = gac_filter(c, store({1, 2}, {1}))
        assert doms(out) == [{1}, {1}]
