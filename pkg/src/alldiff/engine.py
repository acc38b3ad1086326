"""Fixpoint propagation over several constraints and depth-first search."""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable

from . import bounds, decomp, ranges, regin
from .model import AllDifferent, Domain, DomainStore, Infeasible, Level, Problem, is_solution

Filter = Callable[[AllDifferent, DomainStore], DomainStore]

FILTERS: dict[Level, Filter] = {
    Level.DECOMP: decomp.decomp_filter,
    Level.BOUND: bounds.bc_filter,
    Level.RANGE: ranges.rc_filter,
    Level.HYPER_ARC: regin.gac_filter,
}


@dataclass
class SearchStats:
    nodes_explored: int = 0
    failures: int = 0
    prunings: int = 0
    wall_time: float = 0.0

    def as_dict(self) -> dict:
        return {"nodes": self.nodes_explored, "failures": self.failures,
                "prunings": self.prunings, "wall_time": self.wall_time}


def _watchers(p: Problem) -> list[list[int]]:
    watch: list[list[int]] = [[] for _ in range(p.n)]
    for ci, c in enumerate(p.constraints):
        for v in c.vars:
            watch[v].append(ci)
    return watch


def propagate(p: Problem, level: Level, store: DomainStore | None = None, *,
              changed: Iterable[int] | None = None,
              _watch: list[list[int]] | None = None) -> DomainStore:
    """Apply ``level``'s filter to every constraint until nothing changes.

    Constraints are processed from a FIFO queue without duplicates; a
    constraint is re-queued when another filter shrinks one of its
    variables. ``changed`` restricts the initial queue to constraints over
    those variables (the rest must already be at their fixpoint).

    Raises :class:`Infeasible` (with ``constraint`` set) on failure.
    """
    store = p.domains if store is None else store
    for v, d in enumerate(store):
        if not d:
            raise Infeasible(f"variable {p.names[v]} has an empty domain", variable=v)
    filt = FILTERS[level]
    watch = _watch if _watch is not None else _watchers(p)
    if changed is None:
        queue = deque(range(len(p.constraints)))
    else:
        queue = deque(sorted({ci for v in changed for ci in watch[v]}))
    queued = set(queue)
    while queue:
        ci = queue.popleft()
        queued.discard(ci)
        c = p.constraints[ci]
        try:
            new = filt(c, store)
        except Infeasible as exc:
            exc.constraint = ci
            raise
        if new is store:
            continue
        for v in c.vars:
            if new[v] is store[v]:
                continue
            for cj in watch[v]:
                if cj != ci and cj not in queued:
                    queued.add(cj)
                    queue.append(cj)
        store = new
    return store


def solve(p: Problem, level: Level, mode: str = "first") -> tuple[object, SearchStats]:
    """Depth-first search with propagation at every node.

    Branches on the lowest-index unfixed variable, trying its values in
    ascending order. ``mode="first"`` returns the first solution as a
    tuple (or ``None``); ``mode="count"`` returns the number of solutions.
    """
    if mode not in ("first", "count"):
        raise ValueError(f"mode must be 'first' or 'count', not {mode!r}")
    stats = SearchStats()
    watch = _watchers(p)
    start = time.perf_counter()
    count = 0
    first = None
    # each entry is a node still to visit: its store and the variable just fixed
    stack: list[tuple[DomainStore, tuple[int, ...] | None]] = [(p.domains, None)]
    while stack:
        store, changed = stack.pop()
        stats.nodes_explored += 1
        try:
            fixed = propagate(p, level, store, changed=changed, _watch=watch)
        except Infeasible:
            stats.failures += 1
            continue
        stats.prunings += store.size() - fixed.size()
        branch = next((x for x, d in enumerate(fixed) if len(d) > 1), None)
        if branch is None:
            sol = tuple(d.values[0] for d in fixed)
            # every level rejects two equal singletons; this is a cheap guard
            if all(is_solution(c, [sol[v] for v in c.vars]) for c in p.constraints):
                count += 1
                if first is None:
                    first = sol
                if mode == "first":
                    break
            else:
                stats.failures += 1
            continue
        for v in reversed(fixed[branch].values):
            stack.append((fixed.replace({branch: Domain._trusted((v,))}), (branch,)))
    stats.wall_time = time.perf_counter() - start
    return (first if mode == "first" else count), stats
