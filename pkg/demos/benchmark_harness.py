"""
A seeded benchmark run
======================

Configs are flat ``key = value`` text.  Each seed produces one instance, the
oracle solves it once, and every algorithm contributes a CSV row.
"""

import sys

from hfree_mis.bench import parse_config, run_trials, write_csv

config = parse_config(
    """
    corpus = clique-free
    n = 30
    t = 4
    seeds = 0..4
    algo = peel t=2
    algo = ls t=2
    algo = ramsey t=4
    algo = subst pattern=K4
    algo = greedy
    """
)
write_csv(run_trials(config), sys.stdout, with_time=False)
