"""Approximation algorithms for Maximum Independent Set in H-free graphs,
hard-instance generators, and an exact oracle to check them against."""

from .approx import (
    EDGELESS_EXACT,
    ContractViolation,
    EHParams,
    Solution,
    Solver,
    SubstitutionParams,
    cograph_eh_oracle,
    eh_wrapper,
    greedy_min_degree,
    local_search,
    peel_iterate,
    ramsey_is,
    ramsey_solver,
    substitution_approx,
    universal_peel,
)
from .exact import (
    brute_force_mis,
    cograph_solve,
    is_locally_optimal,
    max_clique,
    max_independent_set,
    verify_independent,
)
from .generators import (
    BlowupParams,
    biclique_complement_scan,
    blowup,
    gap_instance,
    intersect,
    remove_short_cycles,
    triangle_free_process,
)
from .graph import (
    Graph,
    ParseError,
    complement,
    format_edge_list,
    girth,
    lex_product,
    odd_girth,
    parse_edge_list,
    parse_graph,
    subdivide_even,
)
from .patterns import (
    Pattern,
    contains_induced,
    count_induced,
    find_candidates,
    pattern_by_name,
    substitute,
)

__version__ = "0.1.0"
