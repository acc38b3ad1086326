"""Bound consistency for alldifferent via Hall intervals.

An interval ``I`` is a Hall interval when exactly ``|I|`` variables have
their whole domain inside it: those variables use up every value of
``I``, so no other variable may take its min or max there. More than
``|I|`` such variables is a pigeonhole contradiction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .model import AllDifferent, Domain, DomainStore, Infeasible


@dataclass(frozen=True)
class HallInterval:
    lo: int
    hi: int
    members: frozenset[int]

    @property
    def width(self) -> int:
        return self.hi - self.lo + 1


@dataclass(frozen=True)
class Overflow:
    """Interval holding more variable domains than it has values."""

    lo: int
    hi: int
    members: frozenset[int]


def scan_intervals(lows: Sequence[int], highs: Sequence[int]) -> list[tuple[int, int, list[int]]]:
    """Find Hall intervals among the hulls ``[lows[i], highs[i]]``.

    Returns ``(lo, hi, positions)`` triples. Candidate endpoints are the
    hull minima and maxima, which is enough: shrinking an interval to the
    extreme endpoints of its members keeps the member set. Raises
    :class:`Infeasible` carrying an :class:`Overflow` witness on the first
    interval with more members than values. O(n^2) after sorting.
    """
    n = len(lows)
    by_high = sorted(range(n), key=lambda i: (highs[i], i))
    found = []
    for a in sorted(set(lows)):
        members: list[int] = []
        k = 0
        while k < n:
            b = highs[by_high[k]]
            # add every hull ending at b that starts at or after a
            while k < n and highs[by_high[k]] == b:
                i = by_high[k]
                if lows[i] >= a:
                    members.append(i)
                k += 1
            if b < a or not members:
                continue
            # Python ints cannot overflow, widths of int64 hulls are exact
            width = b - a + 1
            if len(members) > width:
                raise Infeasible(
                    f"{len(members)} variables confined to [{a},{b}] of width {width}",
                    witness=Overflow(a, b, frozenset(members)))
            if len(members) == width:
                found.append((a, b, list(members)))
    return found


def _hulls(doms: Sequence[Domain]) -> tuple[list[int], list[int]]:
    for i, d in enumerate(doms):
        if not d:
            raise Infeasible(f"position {i} has an empty domain", variable=i)
    return [d.values[0] for d in doms], [d.values[-1] for d in doms]


def _positions_to_vars(c: AllDifferent, exc: Infeasible) -> Infeasible:
    w = exc.witness
    if isinstance(w, Overflow):
        exc.witness = Overflow(w.lo, w.hi, frozenset(c.vars[i] for i in w.members))
    if exc.variable is not None:
        exc.variable = c.vars[exc.variable]
    return exc


def find_hall_intervals(c: AllDifferent, store: DomainStore) -> list[HallInterval]:
    """Hall intervals of ``c`` in ``store`` (in the constraint's offset value space).

    Raises :class:`Infeasible` with an :class:`Overflow` witness if some
    interval contains more domains than values.
    """
    try:
        lows, highs = _hulls(c.view(store))
        triples = scan_intervals(lows, highs)
    except Infeasible as exc:
        raise _positions_to_vars(c, exc) from None
    return [HallInterval(a, b, frozenset(c.vars[i] for i in m)) for a, b, m in triples]


def bound_filter_domains(doms: Sequence[Domain]) -> list[Domain]:
    """Bound-consistent fixpoint of a list of domains (positional)."""
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
                new = d
                if lo <= new.values[0] <= hi:
                    new = new.keep_above(hi)
                if new and lo <= new.values[-1] <= hi:
                    new = new.keep_below(lo)
                if new is d:
                    continue
                if not new:
                    raise Infeasible(f"position {i} emptied by Hall interval [{lo},{hi}]",
                                     variable=i)
                doms[i] = new
                changed = True
    return doms


def bc_filter(c: AllDifferent, store: DomainStore) -> DomainStore:
    """Bound consistency on one alldifferent constraint.

    Only current minima and maxima are ever deleted; interior holes of
    the input domains survive untouched.
    """
    try:
        doms = bound_filter_domains(c.view(store))
    except Infeasible as exc:
        raise _positions_to_vars(c, exc) from None
    return c.commit(store, doms)
