"""
Blow-ups with short cycles removed
==================================

The hard instances start from a base graph, replace each vertex by an
independent class, connect classes of adjacent base vertices at random and
finally delete every short cycle.  At desk scale we can watch how many
vertices the removal costs and check that the independence number stays
close to ``s * alpha(base)``.
"""

from hfree_mis.exact import max_independent_set
from hfree_mis.generators import BlowupParams, gap_instance, triangle_free_process
from hfree_mis.graph import Graph, cycle_graph, girth

# a diamond: two triangles sharing an edge, independence number 2
diamond = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
for p in (0.1, 0.2, 0.4):
    params = BlowupParams(s=6, p=p, gamma=3, seed=11)
    g, report = gap_instance(diamond, params)
    a = max_independent_set(g).value
    print(f"p={p}: n {report['n_before']} -> {report['n_after']}, "
          f"{report['removed_cycles']} triangles removed, girth {girth(g)}, "
          f"alpha {a} >= {6 * 2 - 3 * report['removed_cycles']}, survivors per class {report['class_survivors']}")

###############################################################################
# The report also echoes the asymptotic parameter choice for reference; even
# for a four-vertex base it asks for thousands of vertices per class.

print({k: report[k] for k in ("N", "asymptotic_s", "asymptotic_p", "cycle_bound")})

###############################################################################
# A five-cycle base has no triangles to lose, but its blow-up is full of
# four-cycles, so larger forbidden lengths start to bite.

base = cycle_graph(5)
for gamma in (3, 4, 5):
    g, report = gap_instance(base, BlowupParams(6, 0.4, gamma, 2))
    print(f"gamma={gamma}: removed {report['removed_vertices']} vertices, lengths {sorted(set(report['cycle_lengths']))}")

###############################################################################
# Triangle-free process graphs have small independence numbers.

for n in (24, 40, 56):
    g = triangle_free_process(n, 0)
    print(f"process n={n}: m={g.m}, alpha={max_independent_set(g).value}")
