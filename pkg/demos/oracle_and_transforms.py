"""
Exact independence numbers and the transforms that preserve them
================================================================

The branch-and-bound oracle is the yardstick for every other module, so we
start by checking it against brute force and then watch two graph transforms
move the independence number in predictable ways.
"""

# the oracle and a small zoo of graphs
import numpy as np

from hfree_mis.exact import brute_force_mis, max_clique, max_independent_set
from hfree_mis.generators import gnp
from hfree_mis.graph import complete_graph, cycle_graph, lex_product, petersen_graph, subdivide_even

g = petersen_graph()
res = max_independent_set(g)
print("Petersen:", "alpha =", res.value, "witness", res.best, "nodes", res.nodes_explored)
print("Petersen: omega =", max_clique(g).value)

###############################################################################
# Brute force over all 2^n subsets agrees on random graphs of every density.

rng = np.random.default_rng(0)
agree = 0
for seed in range(50):
    h = gnp(14, float(rng.uniform(0, 1)), seed)
    agree += max_independent_set(h).value == len(brute_force_mis(h))
print(f"branch-and-bound matches brute force on {agree}/50 graphs")

###############################################################################
# Subdividing every edge an even number of times (2c new vertices per edge)
# adds exactly c to the independence number per edge.

k3 = complete_graph(3)
for c in range(4):
    h = subdivide_even(k3, c)
    print(f"K3 subdivided with c={c}: n={h.n}, alpha={max_independent_set(h).value} (1 + {c}*3)")

###############################################################################
# The lexicographic product multiplies independence numbers.

c5 = cycle_graph(5)
prod = lex_product(c5, c5)
print("alpha(C5 . C5) =", max_independent_set(prod).value, "= 2 * 2")
