"""Brute-force reference implementations.

Everything here follows the definitions literally: enumerate tuples,
test every candidate value for a supporting tuple, remove it if none
exists and repeat until nothing changes. Nothing is shared with the
production filters beyond the data model. Budgets are hard limits that
raise rather than truncate.
"""

from __future__ import annotations

import math
from itertools import combinations
from typing import Iterator, Sequence

from .decomp import Disequality
from .model import AllDifferent, Domain, DomainStore, Infeasible, Level, Problem
from .regin import Matching, ValueGraph

DEFAULT_BUDGET = 10**7


class BudgetExceeded(RuntimeError):
    """The brute-force search space is larger than allowed."""


def _check_nonempty(c: AllDifferent, store: DomainStore) -> None:
    for v in c.vars:
        if not store[v]:
            raise Infeasible(f"variable {v} has an empty domain", variable=v)


def _distinct_tuples(choices: Sequence[Sequence[int]]) -> Iterator[tuple[int, ...]]:
    """Tuples with pairwise distinct entries, one entry drawn from each choice list."""
    n = len(choices)
    picked: list[int] = []
    used: set[int] = set()

    def rec(i):
        if i == n:
            yield tuple(picked)
            return
        for v in choices[i]:
            if v not in used:
                used.add(v)
                picked.append(v)
                yield from rec(i + 1)
                picked.pop()
                used.discard(v)

    yield from rec(0)


def enumerate_solutions(c: AllDifferent, store: DomainStore,
                        budget: int = DEFAULT_BUDGET) -> list[tuple[int, ...]]:
    """Every assignment of ``c``'s variables (in domain) satisfying ``c``.

    Tuples are in the constraint's variable order, unshifted, sorted
    lexicographically. Raises :class:`BudgetExceeded` when the product of
    domain sizes exceeds ``budget``.
    """
    size = math.prod(len(store[v]) for v in c.vars)
    if size > budget:
        raise BudgetExceeded(f"{size} candidate tuples exceed the budget of {budget}")
    choices = [[x + o for x in store[v]] for v, o in zip(c.vars, c.offsets)]
    return [tuple(x - o for x, o in zip(t, c.offsets)) for t in _distinct_tuples(choices)]


def _has_support(choices: list[Sequence[int]], i: int, value: int) -> bool:
    fixed = list(choices)
    fixed[i] = (value,)
    return next(_distinct_tuples(fixed), None) is not None


def _interval_choices(doms: Sequence[Domain]) -> list[range]:
    return [range(d.values[0], d.values[-1] + 1) for d in doms]


def _budget_check(doms: Sequence[Domain], budget: int, intervals: bool) -> None:
    if intervals:
        size = math.prod(d.values[-1] - d.values[0] + 1 for d in doms)
    else:
        size = math.prod(len(d) for d in doms)
    if size > budget:
        raise BudgetExceeded(f"{size} candidate tuples exceed the budget of {budget}")


def _closure(doms: list[Domain], level: Level, budget: int) -> list[Domain]:
    """Definitional closure of alldifferent over positional domains."""
    intervals = level in (Level.BOUND, Level.RANGE)
    while True:
        if any(not d for d in doms):
            return doms
        _budget_check(doms, budget, intervals)
        support = _interval_choices(doms) if intervals else [d.values for d in doms]
        changed = False
        for i, d in enumerate(doms):
            if level is Level.BOUND:
                candidates = sorted({d.values[0], d.values[-1]})
            else:
                candidates = d.values
            bad = [v for v in candidates if not _has_support(support, i, v)]
            if bad:
                doms[i] = Domain(v for v in d if v not in bad)
                changed = True
        if not changed:
            return doms


def _decomp_closure(c: AllDifferent, doms: list[Domain]) -> list[Domain]:
    # arc consistency, literally: every value needs a different partner value
    while True:
        if any(not d for d in doms):
            return doms
        changed = False
        for i, j in combinations(range(len(doms)), 2):
            for a, b in ((i, j), (j, i)):
                keep = [v for v in doms[a] if any(w != v for w in doms[b])]
                if len(keep) != len(doms[a]):
                    doms[a] = Domain(keep)
                    changed = True
        if not changed:
            return doms


def oracle_filter(c: AllDifferent, store: DomainStore, level: Level,
                  budget: int = DEFAULT_BUDGET) -> DomainStore:
    """Reference filter: delete values violating ``level``'s definition until none do.

    * ``BOUND``: a domain's min or max needs a pairwise-distinct tuple with
      every other entry inside the other domains' ``[min, max]`` hulls.
    * ``RANGE``: as bound, but every value is checked.
    * ``HYPER_ARC``: every value needs a tuple drawn from the exact domains.
    * ``DECOMP``: arc consistency on each pair ``x_i != x_j``.
    """
    _check_nonempty(c, store)
    doms = c.view(store)
    if level is Level.DECOMP:
        doms = _decomp_closure(c, doms)
    else:
        doms = _closure(doms, level, budget)
    for k, d in enumerate(doms):
        if not d:
            raise Infeasible(f"variable {c.vars[k]} has no supported value",
                             variable=c.vars[k])
    return c.commit(store, doms)


def relational_closure(diseqs: Sequence[Disequality], store: DomainStore,
                       budget: int = DEFAULT_BUDGET) -> DomainStore:
    """Keep the values that occur in a solution of all disequalities at once.

    Enumerates the full cartesian product of the involved domains; it
    knows nothing about alldifferent.
    """
    vars_ = sorted({v for dq in diseqs for v in (dq.a, dq.b)})
    size = math.prod(len(store[v]) for v in vars_)
    if size > budget:
        raise BudgetExceeded(f"{size} candidate tuples exceed the budget of {budget}")
    pos = {v: k for k, v in enumerate(vars_)}
    seen: list[set[int]] = [set() for _ in vars_]

    def rec(k, assignment):
        if k == len(vars_):
            for dq in diseqs:
                if assignment[pos[dq.a]] == assignment[pos[dq.b]] + dq.shift:
                    return
            for s, val in zip(seen, assignment):
                s.add(val)
            return
        for val in store[vars_[k]]:
            assignment.append(val)
            rec(k + 1, assignment)
            assignment.pop()

    rec(0, [])
    if vars_ and not seen[0]:
        raise Infeasible("the disequalities have no common solution")
    return store.replace({v: Domain(seen[k]) for k, v in enumerate(vars_)
                          if len(seen[k]) != len(store[v])})


def count_problem_solutions(p: Problem, budget: int = DEFAULT_BUDGET) -> int:
    """Number of solutions of every constraint of ``p`` at once.

    Plain chronological backtracking in variable order, checking only that
    no constraint sees the same (offset) value twice among the assigned
    variables. No propagation. ``budget`` caps the number of search nodes.
    """
    # per variable: (constraint index, offset) for every occurrence
    occurs: list[list[tuple[int, int]]] = [[] for _ in range(p.n)]
    for ci, c in enumerate(p.constraints):
        for v, o in zip(c.vars, c.offsets):
            occurs[v].append((ci, o))
    used: list[set[int]] = [set() for _ in p.constraints]
    nodes = 0

    def rec(x):
        nonlocal nodes
        if x == p.n:
            return 1
        total = 0
        for val in p.domains[x]:
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(f"more than {budget} search nodes")
            if any(val + o in used[ci] for ci, o in occurs[x]):
                continue
            for ci, o in occurs[x]:
                used[ci].add(val + o)
            total += rec(x + 1)
            for ci, o in occurs[x]:
                used[ci].discard(val + o)
        return total

    return rec(0)


def is_consistent(c: AllDifferent, store: DomainStore, level: Level,
                  budget: int = DEFAULT_BUDGET) -> bool:
    """Whether ``c`` already satisfies ``level``'s definition in ``store``."""
    if any(not store[v] for v in c.vars):
        return False
    try:
        return oracle_filter(c, store, level, budget) == store
    except Infeasible:
        return False


def enumerate_maximum_matchings(g: ValueGraph, limit: int = 8) -> list[Matching]:
    """All maximum-cardinality matchings of ``g`` (at most ``limit`` variable nodes)."""
    n = len(g.var_nodes)
    if n > limit:
        raise BudgetExceeded(f"{n} variable nodes exceed the limit of {limit}")
    best = 0
    found: list[tuple] = []
    mate: list[int | None] = [None] * n
    used: set[int] = set()

    def rec(k, size):
        nonlocal best, found
        # prune branches that cannot reach the best size so far
        if size + (n - k) < best:
            return
        if k == n:
            if size > best:
                best, found = size, []
            found.append(tuple(mate))
            return
        for d in g.adj[k]:
            if d not in used:
                used.add(d)
                mate[k] = d
                rec(k + 1, size + 1)
                used.discard(d)
        mate[k] = None
        rec(k + 1, size)

    rec(0, 0)
    return [Matching(g, m) for m in found if sum(d is not None for d in m) == best]


def hall_violation(c: AllDifferent, store: DomainStore, limit: int = 12) -> tuple[int, ...] | None:
    """Smallest variable set whose domains hold fewer values than its size.

    Scans subsets in order of size; ``None`` means every subset satisfies
    the marriage condition.
    """
    n = len(c.vars)
    if n > limit:
        raise BudgetExceeded(f"{n} variables exceed the subset-scan limit of {limit}")
    view = c.view(store)
    for k in range(1, n + 1):
        for subset in combinations(range(n), k):
            union = set()
            for i in subset:
                union.update(view[i])
            if len(union) < k:
                return tuple(c.vars[i] for i in subset)
    return None
