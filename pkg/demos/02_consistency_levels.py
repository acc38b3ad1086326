"""
How the four consistency levels differ
======================================

Three small stores, each showing a gap between two levels:

* holes: bound consistency only looks at minima and maxima
* two values for three variables: only hyper-arc consistency sees the
  pigeonhole
* a staircase: the pairwise decomposition never prunes without a
  singleton, while hyper-arc consistency fixes the last variable
"""

from alldiff import (AllDifferent, Domain, DomainStore, Infeasible, Level, find_hall_intervals,
                     find_hall_sets)
from alldiff.engine import FILTERS


def run_all(title, store):
    c = AllDifferent(tuple(range(len(store))))
    print(f"\n{title}: {store}")
    for level in Level:
        try:
            out = FILTERS[level](c, store)
            print(f"  {level.value:<7} {out}")
        except Infeasible as exc:
            print(f"  {level.value:<7} infeasible ({exc.reason})")
    return c


holes = DomainStore([Domain({1, 3}), Domain({2}), Domain({1, 2, 3})])
c = run_all("holes", holes)
print("  Hall intervals:", [(h.lo, h.hi, sorted(h.members)) for h in find_hall_intervals(c, holes)])
print("  Hall sets:     ", [(sorted(h.members), h.lo, h.hi) for h in find_hall_sets(c, holes)])

run_all("two values", DomainStore([Domain({1, 3})] * 3))

for n in (4, 6):
    stairs = DomainStore([Domain.interval(1, n - 1)] * (n - 1) + [Domain.interval(1, n)])
    run_all(f"staircase n={n}", stairs)
