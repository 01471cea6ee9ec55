"""
Clique peeling on cographs and the substitution algorithm
=========================================================

The clique-peeling wrapper asks an oracle for a large clique or independent
set, removes cliques, and returns a partition certificate when it gives up.
The substitution algorithm combines solvers for two smaller patterns; here
K4 is split as a triangle with a single edge substituted at one corner.
"""

from hfree_mis.approx import (
    EDGELESS_EXACT,
    EHParams,
    SubstitutionParams,
    eh_wrapper,
    ramsey_solver,
    substitution_approx,
)
from hfree_mis.exact import max_independent_set
from hfree_mis.generators import clique_free_process, random_cograph
from hfree_mis.patterns import are_isomorphic, pattern_by_name, split_pattern, substitute

###############################################################################
# Cographs: every induced subgraph has a clique or independent set of size at
# least sqrt(n), so the wrapper either returns one early or partitions.

for seed in range(6):
    g = random_cograph(36, seed)
    sol = eh_wrapper(g, params=EHParams(delta=0.5))
    a = max_independent_set(g).value
    if sol.tag == "singleton":
        cert = sol.certificate
        print(f"seed {seed}: singleton, {len(cert.clique_partition)} cliques + "
              f"{len(cert.residual)} residual >= alpha={a}")
    else:
        print(f"seed {seed}: returned {sol.size} vertices, alpha={a}")

###############################################################################
# Splitting K4 recovers the two smaller patterns.

h1, h2 = split_pattern(pattern_by_name("K4"))
print("h1:", h1, " h2:", h2, " recombined is K4:", are_isomorphic(substitute(h1, h2).graph, pattern_by_name("K4").graph))

params = SubstitutionParams.from_solvers(ramsey_solver(3), EDGELESS_EXACT, h1.n, h2.n)
print(f"epsilon={params.epsilon}, gamma={params.gamma:.4f}, eta={params.eta:.4f}, delta={params.delta:.5f}")

###############################################################################
# At this scale the sample sizes are tiny and the loop usually ends after the
# first solver answer; the trace shows which branch ran.

g = clique_free_process(50, 4, 3)
for seed in range(5):
    sol = substitution_approx(g, h1, h2, ramsey_solver(3), EDGELESS_EXACT, params, seed=seed)
    branches = [step.branch for step in sol.certificate.trace]
    print(f"seed {seed}: size {sol.size}, {sol.tag}, branches {branches}")
