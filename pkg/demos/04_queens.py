"""
Search effort on n-queens
=========================

Queens are modelled as three alldifferent constraints over the same row
variables (rows, and rows shifted by +i and -i for the two diagonals).
Stronger filtering never enlarges the search tree under the fixed
variable order; how much it saves, and whether it pays for itself, varies.
"""

from alldiff import Level, solve
from alldiff.generators import nqueens
from alldiff.regin import warm_up

warm_up()
print(f"{'n':>3} {'level':<7} {'solutions':>9} {'nodes':>7} {'failures':>8} {'ms':>8}")
for n in range(4, 10):
    p = nqueens(n)
    for level in Level:
        count, stats = solve(p, level, "count")
        print(f"{n:>3} {level.value:<7} {count:>9} {stats.nodes_explored:>7} "
              f"{stats.failures:>8} {stats.wall_time * 1e3:>8.1f}")
