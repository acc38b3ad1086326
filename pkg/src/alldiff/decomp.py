"""Binary decomposition of alldifferent and arc consistency on it.

Arc consistency on a disequality only ever removes a value when the other
side is a singleton, so the filter is a worklist over variables whose
domain has shrunk to one value.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import NamedTuple, Sequence

from .model import AllDifferent, Domain, DomainStore, Infeasible


class Disequality(NamedTuple):
    """``x[a] != x[b] + shift`` with ``a < b``."""

    a: int
    b: int
    shift: int = 0


def decompose(c: AllDifferent) -> list[Disequality]:
    """All pairwise disequalities of ``c``, one per unordered variable pair."""
    out = []
    for (va, oa), (vb, ob) in combinations(zip(c.vars, c.offsets), 2):
        # x_a + oa != x_b + ob  <=>  x_a != x_b + (ob - oa)
        if va > vb:
            va, oa, vb, ob = vb, ob, va, oa
        out.append(Disequality(va, vb, ob - oa))
    out.sort()
    return out


def ac_filter(diseqs: Sequence[Disequality], store: DomainStore) -> DomainStore:
    """Arc consistency on a set of disequalities, run to its fixpoint."""
    # nbrs[p] holds (q, delta): x_q != x_p + delta
    nbrs: dict[int, list[tuple[int, int]]] = {}
    for a, b, s in diseqs:
        nbrs.setdefault(a, []).append((b, -s))
        nbrs.setdefault(b, []).append((a, s))

    doms: dict[int, Domain] = {}
    queue: deque[int] = deque()
    for v in sorted(nbrs):
        d = store[v]
        if not d:
            raise Infeasible(f"variable {v} has an empty domain", variable=v)
        doms[v] = d
        if len(d) == 1:
            queue.append(v)
    queued = set(queue)

    while queue:
        p = queue.popleft()
        (val,) = doms[p].values
        for q, delta in nbrs[p]:
            dq = doms[q]
            new = dq.remove(val + delta)
            if new is dq:
                continue
            if not new:
                raise Infeasible(f"variable {q} lost its last value {val + delta}",
                                 variable=q)
            doms[q] = new
            if len(new) == 1 and q not in queued:
                queued.add(q)
                queue.append(q)

    return store.replace({v: d for v, d in doms.items() if d is not store[v]})


def decomp_filter(c: AllDifferent, store: DomainStore) -> DomainStore:
    return ac_filter(decompose(c), store)
