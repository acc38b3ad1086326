"""Range consistency for alldifferent via Hall sets.

A Hall set is a group of ``k`` variables whose domains' combined hull
spans exactly ``k`` values. Every value of that hull is taken by the
group, so all other variables lose the whole hull, holes included.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .bounds import _hulls, _positions_to_vars, scan_intervals
from .model import AllDifferent, Domain, DomainStore, Infeasible


@dataclass(frozen=True)
class HallSet:
    members: frozenset[int]
    lo: int
    hi: int


def find_hall_sets(c: AllDifferent, store: DomainStore) -> list[HallSet]:
    """Hall sets of ``c``; ``lo``/``hi`` bound the union of the members' domains."""
    try:
        doms = c.view(store)
        lows, highs = _hulls(doms)
        triples = scan_intervals(lows, highs)
    except Infeasible as exc:
        raise _positions_to_vars(c, exc) from None
    out = []
    for _, _, members in triples:
        lo = min(lows[i] for i in members)
        hi = max(highs[i] for i in members)
        # a non-tight Hall interval would mean more members than hull values,
        # which scan_intervals has already rejected
        assert hi - lo + 1 == len(members)
        out.append(HallSet(frozenset(c.vars[i] for i in members), lo, hi))
    return out


def range_filter_domains(doms: Sequence[Domain]) -> list[Domain]:
    doms = list(doms)
    changed = True
    while changed:
        changed = False
        lows, highs = _hulls(doms)
        for lo, hi, members in scan_intervals(lows, highs):
            inside = set(members)
            for i, d in enumerate(doms):
                if i in inside:
                    continue
                new = d.remove_interval(lo, hi)
                if new is d:
                    continue
                if not new:
                    raise Infeasible(f"position {i} emptied by Hall set on [{lo},{hi}]",
                                     variable=i)
                doms[i] = new
                changed = True
    return doms


def rc_filter(c: AllDifferent, store: DomainStore) -> DomainStore:
    """Range consistency on one alldifferent constraint.

    Range consistency cannot see that three variables over ``{1,3}`` are
    infeasible (the hull ``[1,3]`` has three values); such stores pass
    through unchanged.
    """
    try:
        doms = range_filter_domains(c.view(store))
    except Infeasible as exc:
        raise _positions_to_vars(c, exc) from None
    return c.commit(store, doms)
