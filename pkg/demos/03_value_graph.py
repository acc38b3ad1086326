"""
Inside the hyper-arc filter
===========================

The filter builds the bipartite graph between speakers and hours, finds a
maximum matching, and removes every edge that lies in no maximum
matching. Here we look at each step on the revised talk schedule.
"""

from alldiff import build_value_graph, dump_value_graph, mark_removable_edges, maximum_matching
from alldiff.generators import revised_speeches
from alldiff.oracle import enumerate_maximum_matchings

problem = revised_speeches()
c = problem.constraints[0]
graph = build_value_graph(c, problem.domains)
print(f"{len(graph.var_nodes)} speakers, {len(graph.val_nodes)} hours, {graph.num_edges} edges")

for method in ("hopcroft-karp", "augmenting"):
    m = maximum_matching(graph, method)
    print(f"\n{method} matching (name: matched | other hours)")
    print(dump_value_graph(graph, m, problem.names), end="")
    removable = sorted(mark_removable_edges(graph, m))
    print("removable:", [(problem.names[x], d) for x, d in removable])

# The removable set does not depend on which matching we start from. The
# brute-force oracle lists every maximum matching to confirm it.
all_matchings = enumerate_maximum_matchings(graph)
used = frozenset().union(*(m.edges for m in all_matchings))
print(f"\n{len(all_matchings)} maximum matchings in total; edges used by none:",
      sorted(graph.edges - used))
