import pytest

from alldiff import (AllDifferent, Domain, DomainStore, Level, Ordering, Problem,
                     ValidationError, compare_stores, is_solution, validate)
from alldiff.generators import speeches
from helpers import store


class TestDomain:
    def test_sorted_and_deduplicated(self):
        d = Domain([3, 1, 3, 2])
        assert d.values == (1, 2, 3)
        assert (d.min, d.max) == (1, 3)
        assert len(d) == 3

    def test_holes_are_kept(self):
        d = Domain({1, 3})
        assert 2 not in d
        assert list(d) == [1, 3]
        assert str(d) == "{1,3}"

    def test_empty(self):
        d = Domain()
        assert d.is_empty and not d
        with pytest.raises(ValueError):
            d.min

    def test_rejects_values_outside_int64(self):
        with pytest.raises((ValueError, OverflowError)):
            Domain([2**63])
        Domain([2**63 - 1, -(2**63)])

    def test_interval(self):
        assert Domain.interval(2, 5).values == (2, 3, 4, 5)
        assert Domain.interval(3, 2).is_empty

    def test_remove_returns_self_when_unchanged(self):
        d = Domain([1, 2, 3])
        assert d.remove(7) is d
        assert d.remove(2).values == (1, 3)

    def test_remove_interval(self):
        d = Domain(range(1, 8))
        assert d.remove_interval(3, 5).values == (1, 2, 6, 7)
        assert d.remove_interval(10, 12) is d

    def test_keep_above_below(self):
        d = Domain([1, 3, 5, 7])
        assert d.keep_above(3).values == (5, 7)
        assert d.keep_below(5).values == (1, 3)
        assert d.keep_above(0) is d

    def test_shift(self):
        assert Domain([1, 4]).shift(-2).values == (-1, 2)

    def test_subset(self):
        assert Domain([1, 3]) <= Domain([1, 2, 3])
        assert not Domain([1, 4]) <= Domain([1, 2, 3])


class TestCompareStores:
    def test_identity(self):
        a = store({1, 3}, {2})
        assert compare_stores(a, store({1, 3}, {2})) is Ordering.EQUAL

    def test_smaller(self):
        a = store({1, 3}, {2}, {1, 3})
        b = store({1, 3}, {2}, {1, 2, 3})
        assert compare_stores(a, b) is Ordering.SMALLER
        assert compare_stores(b, a) is Ordering.LARGER
        assert a <= b and not b <= a

    def test_incomparable(self):
        a = store({1}, {1, 2})
        b = store({1, 2}, {2})
        assert compare_stores(a, b) is Ordering.INCOMPARABLE

    def test_failed_store_is_smallest(self):
        failed = store({1}, set())
        assert compare_stores(failed, store({5}, {6})) is Ordering.SMALLER
        assert compare_stores(store({5}, {6}), failed) is Ordering.LARGER
        assert compare_stores(failed, store(set(), {1, 2})) is Ordering.EQUAL

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            compare_stores(store({1}), store({1}, {2}))


class TestIsSolution:
    def test_schedule(self):
        c = AllDifferent(tuple(range(6)))
        assert is_solution(c, (6, 3, 5, 2, 4, 1))

    def test_equal_pair(self):
        assert not is_solution(AllDifferent((0, 1)), (1, 1))

    def test_unary(self):
        assert is_solution(AllDifferent((0,)), (5,))

    def test_arity_mismatch(self):
        with pytest.raises(ValueError):
            is_solution(AllDifferent((0, 1)), (1,))

    def test_offsets(self):
        # 1 + 1 == 2 + 0
        assert not is_solution(AllDifferent((0, 1), (1, 0)), (1, 2))


class TestValidate:
    def test_duplicate_variable(self):
        p = Problem(store({1}, {2}), (AllDifferent((0, 0)),))
        errors = validate(p)
        assert [e.message for e in errors] == ["duplicate variable"]
        assert errors[0].constraint == 0 and errors[0].variable == 0

    def test_speeches_ok(self):
        assert validate(speeches()) == []

    def test_dangling_variable(self):
        p = Problem(DomainStore([Domain([1])] * 6), (AllDifferent((0, 8)),))
        errors = validate(p)
        assert len(errors) == 1 and errors[0].variable == 8

    def test_no_constraints(self):
        assert validate(Problem(store({1}))) != []

    def test_empty_constraint(self):
        assert validate(Problem(store({1}), (AllDifferent(()),))) != []

    def test_empty_domain_is_not_an_error(self):
        assert validate(Problem(store(set(), {1}), (AllDifferent((0, 1)),))) == []

    def test_check_raises(self):
        with pytest.raises(ValidationError) as info:
            Problem(store({1}), (AllDifferent((0, 0)),)).check()
        assert info.value.errors


def test_level_implications():
    assert Level.HYPER_ARC.implies(Level.DECOMP)
    assert Level.RANGE.implies(Level.BOUND)
    assert not Level.BOUND.implies(Level.RANGE)
    assert not Level.DECOMP.implies(Level.BOUND)
    assert not Level.RANGE.implies(Level.DECOMP)


def test_commit_only_touches_changed_variables():
    c = AllDifferent((0, 2), (1, -1))
    s = store({1, 2}, {9}, {3, 4})
    view = c.view(s)
    assert [d.values for d in view] == [(2, 3), (2, 3)]
    assert c.commit(s, view) is s
    out = c.commit(s, [Domain([3]), view[1]])
    assert out[0].values == (2,) and out[2] is s[2]
