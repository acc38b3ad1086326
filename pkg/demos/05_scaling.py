"""
Scaling of the hyper-arc filter
===============================

Matching runs in O(sqrt(n) m) for m edges and the component pass is
linear, so with the domain size capped, doubling n should cost a bit more
than double. Two families: planted (a hidden permutation plus random
extra values) and nested (a chain of Hall sets that fixes every variable).
"""

import time

from alldiff.generators import nested_intervals, planted_permutation
from alldiff.regin import gac_filter, warm_up

warm_up()
cap = 500
for name, gen in (("planted", planted_permutation), ("nested", nested_intervals)):
    print(f"\n{name}, domains of at most {cap} values")
    previous = None
    for n in (500, 1000, 2000, 4000):
        p = gen(n, cap, seed=0)
        start = time.perf_counter()
        out = gac_filter(p.constraints[0], p.domains)
        elapsed = time.perf_counter() - start
        ratio = f"x{elapsed / previous:.2f}" if previous else ""
        print(f"  n={n:<5} edges={p.domains.size():>8} kept={out.size():>8} "
              f"{elapsed:7.3f} s {ratio}")
        previous = elapsed
