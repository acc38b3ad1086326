"""
Scheduling talks with one alldifferent constraint
=================================================

Six speakers each give a one-hour talk, the hours must differ, and every
speaker has a window of hours they can make. We filter the windows at each
consistency level, solve the schedule, then let two speakers cancel.
"""

from alldiff import Level, propagate, solve
from alldiff.generators import revised_speeches, speeches


def show(problem, store):
    for name, dom in zip(problem.names, store):
        print(f"  {name:<10} {dom}")


problem = speeches()
print("Windows as given:")
show(problem, problem.domains)

# No window is a single hour, so the pairwise decomposition prunes nothing.
# The other levels notice that Frederic and Maarten use up {3,4}, and then
# three windows collapse to a single hour.
for level in Level:
    print(f"\nAfter {level.value} filtering:")
    show(problem, propagate(problem, level))

schedule, stats = solve(problem, Level.HYPER_ARC)
print("\nFirst schedule found:", dict(zip(problem.names, schedule)))
print(f"  ({stats.nodes_explored} search nodes, {stats.failures} failures)")

count, _ = solve(problem, Level.HYPER_ARC, "count")
print("Number of schedules:", count)

# Krzysztof and Luca cancel. Bound filtering can trim Sebastian's window
# from below but not cut a hole into JanGeorg's; hyper-arc filtering
# removes hours 3 and 4 from both.
revised = revised_speeches()
for level in (Level.BOUND, Level.HYPER_ARC):
    print(f"\nRevised schedule, {level.value} filtering:")
    show(revised, propagate(revised, level))
