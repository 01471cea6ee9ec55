"""
Peeling, local search and greedy on sparse graphs
=================================================

Three simple algorithms with provable guarantees on restricted graph classes,
run side by side on random triangle-free and K4-free graphs.
"""

from hfree_mis.approx import greedy_min_degree, local_search, peel_iterate, ramsey_is
from hfree_mis.exact import max_independent_set
from hfree_mis.generators import clique_free_process, triangle_free_process

###############################################################################
# Triangle-free graphs: neighborhoods are independent sets, so peeling one
# vertex at a time and keeping the best leaf finds at least sqrt(alpha).

print(f"{'seed':>4} {'n':>3} {'alpha':>5} {'peel':>4} {'ls':>3} {'greedy':>6} {'ramsey':>6}")
for seed in range(8):
    g = triangle_free_process(36, seed)
    a = max_independent_set(g).value
    peel = peel_iterate(g, t=1)
    ls = local_search(g, t=2)
    print(f"{seed:>4} {g.n:>3} {a:>5} {peel.size:>4} {ls.size:>3} "
          f"{greedy_min_degree(g).size:>6} {ramsey_is(g, 3).size:>6}")
    assert peel.size**2 >= a

###############################################################################
# The winning comb leaf records which vertices were peeled on the way.

cert = peel_iterate(triangle_free_process(20, 1), t=1).certificate
print("peeled path", cert.path, "leaf set", cert.leaf_set, "of", cert.leaves, "leaves")

###############################################################################
# K4-free graphs need two nested peels; the guarantee becomes alpha ** (1/3).

for seed in range(4):
    g = clique_free_process(30, 4, seed)
    a = max_independent_set(g).value
    sol = peel_iterate(g, t=2)
    print(f"K4-free seed {seed}: alpha={a}, nested peel={sol.size}, cube={sol.size**3}")
