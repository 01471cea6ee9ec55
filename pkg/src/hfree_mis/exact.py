"""Exact independence/clique numbers and verification predicates.

:func:`max_independent_set` is the ground truth used by every ratio check.
:func:`brute_force_mis` is a deliberately dumb enumerator kept around to
validate it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

import numpy as np

from .graph import Graph, bits, complement, mask_of

DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class OracleResult:
    """Best set found; when ``timed_out`` the value is only a lower bound."""

    best: tuple[int, ...]
    value: int
    nodes_explored: int
    timed_out: bool = False


class _Budget(Exception):
    pass


def _clique_cover_bound(rows, cand: int) -> int:
    # greedy partition of cand into cliques; each clique holds at most one IS vertex
    cliques: list[int] = []
    for v in bits(cand):
        row = rows[v]
        for i, c in enumerate(cliques):
            if c & ~row == 0:
                cliques[i] = c | (1 << v)
                break
        else:
            cliques.append(1 << v)
    return len(cliques)


def _cycles_mis(rows, cand: int) -> list[int]:
    # every vertex of cand has exactly two neighbors in cand: a disjoint union of cycles
    chosen = []
    left = cand
    while left:
        start = (left & -left).bit_length() - 1
        cycle = [start]
        prev, cur = -1, start
        while True:
            step = next(w for w in bits(rows[cur] & cand) if w != prev)
            if step == start:
                break
            cycle.append(step)
            prev, cur = cur, step
        left &= ~mask_of(cycle)
        chosen.extend(cycle[0 : 2 * (len(cycle) // 2) : 2])
    return chosen


def max_independent_set(g: Graph, budget: int = DEFAULT_BUDGET) -> OracleResult:
    """Maximum independent set by branch and bound.

    Vertices of degree 0 or 1 are taken greedily, a residual 2-regular graph
    is solved directly, otherwise the search branches on a maximum-degree
    vertex (lowest index on ties).  Subtrees are pruned with a greedy clique
    cover bound.  Exceeding ``budget`` search nodes returns the incumbent with
    ``timed_out`` set.
    """
    rows = g.rows
    best: list[int] = _greedy_seed(g)
    nodes = 0

    def search(cand: int, chosen: list[int]) -> None:
        nonlocal best, nodes
        nodes += 1
        if nodes > budget:
            raise _Budget
        chosen = list(chosen)
        # degree <= 1 vertices always belong to some maximum solution
        changed = True
        while changed and cand:
            changed = False
            for v in bits(cand):
                if (cand >> v) & 1 and (rows[v] & cand).bit_count() <= 1:
                    chosen.append(v)
                    cand &= ~(rows[v] | (1 << v))
                    changed = True
        if not cand:
            if len(chosen) > len(best):
                best = chosen
            return
        if len(chosen) + _clique_cover_bound(rows, cand) <= len(best):
            return
        pivot, pdeg = -1, -1
        for v in bits(cand):
            d = (rows[v] & cand).bit_count()
            if d > pdeg:
                pivot, pdeg = v, d
        if pdeg == 2:
            total = chosen + _cycles_mis(rows, cand)
            if len(total) > len(best):
                best = total
            return
        search(cand & ~(rows[pivot] | (1 << pivot)), chosen + [pivot])
        search(cand & ~(1 << pivot), chosen)

    timed_out = False
    try:
        search(g.vertex_mask, [])
    except _Budget:
        timed_out = True
        nodes = budget
    result = tuple(sorted(best))
    return OracleResult(result, len(result), nodes, timed_out)


def _greedy_seed(g: Graph) -> list[int]:
    left = g.vertex_mask
    chosen = []
    while left:
        v = min(bits(left), key=lambda v: ((g.rows[v] & left).bit_count(), v))
        chosen.append(v)
        left &= ~(g.rows[v] | (1 << v))
    return chosen


def max_clique(g: Graph, budget: int = DEFAULT_BUDGET) -> OracleResult:
    return max_independent_set(complement(g), budget)


def independence_number(g: Graph, budget: int = DEFAULT_BUDGET) -> int | None:
    """``alpha(g)``, or ``None`` if the search ran out of budget."""
    res = max_independent_set(g, budget)
    return None if res.timed_out else res.value


def brute_force_mis(g: Graph) -> tuple[int, ...]:
    """Largest independent set by checking all ``2**n`` subsets (``n <= 24``).

    Ties go to the subset with the smallest bitmask.
    """
    n = g.n
    if n > 24:
        raise ValueError("brute force limited to 24 vertices")
    if n == 0:
        return ()
    masks = np.arange(1 << n, dtype=np.int64)
    ok = np.ones(1 << n, dtype=bool)
    for v in range(n):
        has_v = (masks >> v) & 1 == 1
        ok &= ~has_v | ((masks & g.rows[v]) == 0)
    sizes = np.zeros(1 << n, dtype=np.int8)
    for v in range(n):
        sizes += ((masks >> v) & 1).astype(np.int8)
    sizes[~ok] = -1
    best = int(np.argmax(sizes))
    return tuple(v for v in range(n) if (best >> v) & 1)


# -- cographs -----------------------------------------------------------------


def _components(rows, mask: int, co: bool) -> list[int]:
    comps = []
    left = mask
    while left:
        low = left & -left
        comp = low
        frontier = low
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            nbrs = (mask & ~rows[v] & ~(1 << v)) if co else (rows[v] & mask)
            new = nbrs & ~comp
            comp |= new
            frontier |= new
        comps.append(comp)
        left &= ~comp
    return comps


def cograph_solve(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Maximum independent set and maximum clique of a P4-free graph.

    Splits into components (independent sets add up, cliques take the max)
    or co-components (the reverse).  A graph with neither split on two or more
    vertices contains an induced P4, and ``None`` is returned.
    """

    def solve(mask: int) -> tuple[int, int] | None:
        if mask & (mask - 1) == 0:
            return mask, mask
        comps = _components(g.rows, mask, co=False)
        if len(comps) > 1:
            parts = [solve(c) for c in comps]
            if any(p is None for p in parts):
                return None
            alpha = 0
            for a, _ in parts:
                alpha |= a
            omega = max((w for _, w in parts), key=int.bit_count)
            return alpha, omega
        cocomps = _components(g.rows, mask, co=True)
        if len(cocomps) > 1:
            parts = [solve(c) for c in cocomps]
            if any(p is None for p in parts):
                return None
            omega = 0
            for _, w in parts:
                omega |= w
            alpha = max((a for a, _ in parts), key=int.bit_count)
            return alpha, omega
        return None

    if g.n == 0:
        return (), ()
    out = solve(g.vertex_mask)
    if out is None:
        return None
    return tuple(bits(out[0])), tuple(bits(out[1]))


# -- predicates ---------------------------------------------------------------


def _check_range(g: Graph, s: Iterable[int]) -> list[int]:
    s = list(s)
    for v in s:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    return s


def verify_independent(g: Graph, s: Iterable[int]) -> bool:
    return g.is_independent(_check_range(g, s))


def is_locally_optimal(g: Graph, s: Iterable[int], t: int) -> bool:
    """True iff no swap of ``X`` (inside ``s``) for a larger ``Y`` (outside) of size ``<= t`` stays independent.

    Plain enumeration of every ``(X, Y)`` pair; meant as a check, not a search.
    """
    s = sorted(set(_check_range(g, s)))
    if not g.is_independent(s):
        raise ValueError("the set is not independent")
    if t < 1:
        raise ValueError("t must be at least 1")
    outside = [v for v in range(g.n) if v not in set(s)]
    for ysize in range(1, t + 1):
        for Y in combinations(outside, ysize):
            if not g.is_independent(Y):
                continue
            ymask = mask_of(Y)
            for xsize in range(ysize):
                for X in combinations(s, xsize):
                    rest = set(s) - set(X)
                    if all(g.rows[v] & ymask == 0 for v in rest):
                        return False
    return True
