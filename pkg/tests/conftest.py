from __future__ import annotations

import itertools
import sys

import numpy as np
from hypothesis import strategies as st

from hfree_mis.graph import Graph


def random_graph(rng: np.random.Generator, n: int, p: float) -> Graph:
    edges = [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 10) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, chosen) if keep])


def subset_alpha(g: Graph) -> int:
    """Independence number by plain subset enumeration, largest size first."""
    for k in range(g.n, 0, -1):
        for s in itertools.combinations(range(g.n), k):
            if all(not g.has_edge(u, v) for u, v in itertools.combinations(s, 2)):
                return k
    return 0


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number])
