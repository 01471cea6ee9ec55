"""Random instance constructions: blow-ups with short-cycle removal, the
triangle-free process, intersections, and a few corpus helpers.

Randomness always comes from a ``numpy.random.Generator`` (PCG64) so a seed
regenerates the same graph bit for bit on any platform.  Use
:func:`make_rng` to build one from an integer seed and
:func:`spawn_seeds` to split a seed across independent trials.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .graph import Graph, bits, mask_of

# -- randomness -----------------------------------------------------------------


def make_rng(seed: int | np.random.Generator | None) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.Generator(np.random.PCG64(seed))


def spawn_seeds(seed: int, count: int) -> list[int]:
    """Independent 64-bit child seeds derived from ``seed``."""
    children = np.random.SeedSequence(seed).spawn(count)
    return [int(c.generate_state(1, dtype=np.uint64)[0]) for c in children]


# -- blow-up and cycle removal ----------------------------------------------------


@dataclass(frozen=True)
class BlowupParams:
    """Class size ``s``, edge probability ``p`` and cycle length bound ``gamma``.

    ``N`` and ``eta`` only feed the asymptotic reference values in the report
    (``s = N**(2*gamma-1)``, ``p = N**-(2*(gamma-1)+eta)``); at desk scale
    ``s`` and ``p`` are set directly.
    """

    s: int
    p: float
    gamma: int = 3
    seed: int = 0
    N: int | None = None
    eta: float = 0.1

    def __post_init__(self) -> None:
        if self.s < 1:
            raise ValueError("class size s must be at least 1")
        if not 0 <= self.p <= 1:
            raise ValueError("p must lie in [0, 1]")
        if self.gamma < 3:
            raise ValueError("gamma must be at least 3")
        if self.eta <= 0:
            raise ValueError("eta must be positive")

    @classmethod
    def asymptotic(cls, N: int, gamma: int = 3, eta: float = 0.1, seed: int = 0) -> BlowupParams:
        """The hardness-reduction setting: ``s = N**(2g-1)``, ``p = N**-(2(g-1)+eta)``.

        Only usable for tiny ``N``; the class size explodes quickly.
        """
        return cls(N ** (2 * gamma - 1), N ** -(2 * (gamma - 1) + eta), gamma, seed, N, eta)

    def reference(self, base_n: int) -> dict:
        N = self.N or base_n
        return {
            "N": N,
            "eta": self.eta,
            "asymptotic_s": N ** (2 * self.gamma - 1),
            "asymptotic_p": N ** -(2 * (self.gamma - 1) + self.eta),
            # expected short cycles in the blow-up before removal, at the actual (s, p)
            "cycle_bound": self.gamma * (self.s * N * self.p) ** self.gamma,
        }


def blowup(h: Graph, s: int, p: float, rng) -> Graph:
    """Replace each vertex of ``h`` by an independent class of ``s`` vertices.

    Class of base vertex ``v`` is ``v*s .. v*s+s-1``.  For every base edge
    ``uv`` (sorted order) each cross pair is joined independently with
    probability ``p``; the draws are consumed in row-major order, ``u`` side
    outer.
    """
    if s < 1:
        raise ValueError("class size s must be at least 1")
    rng = make_rng(rng)
    rows = [0] * (h.n * s)
    for u, v in h.edges():
        draws = rng.random(s * s) < p
        for i in range(s):
            x = u * s + i
            for j in np.flatnonzero(draws[i * s : (i + 1) * s]):
                y = v * s + int(j)
                rows[x] |= 1 << y
                rows[y] |= 1 << x
    return Graph(h.n * s, tuple(rows))


def _lexmin_cycle(rows, alive: int, length: int) -> list[int] | None:
    # Smallest cycle of the given length in canonical form: starts at its minimum
    # vertex, second vertex smaller than the last.  DFS in increasing order finds
    # it first.
    for r in bits(alive):
        higher = alive & ~((1 << (r + 1)) - 1)
        path = [r]

        def dfs(cur: int, used: int) -> bool:
            if len(path) == length:
                return bool((rows[cur] >> r) & 1)
            for w in bits(rows[cur] & higher & ~used):
                path.append(w)
                if dfs(w, used | (1 << w)):
                    return True
                path.pop()
            return False

        if dfs(r, 0):
            return path
    return None


@dataclass
class CycleRemoval:
    graph: Graph
    survivors: list[int]
    removed_cycles: list[tuple[int, ...]] = field(default_factory=list)

    @property
    def removed_vertices(self) -> int:
        return sum(len(c) for c in self.removed_cycles)


def remove_short_cycles(g: Graph, gamma: int) -> CycleRemoval:
    """Delete the vertices of short cycles until the girth exceeds ``gamma``.

    Each round takes a shortest cycle, choosing the lexicographically smallest
    canonical vertex sequence among those, and removes all its vertices.
    ``survivors[i]`` is the original index of new vertex ``i``.
    """
    from .graph import _shortest_cycle

    if gamma < 3:
        raise ValueError("gamma must be at least 3")
    alive = g.vertex_mask
    removed: list[tuple[int, ...]] = []
    while True:
        length = _shortest_cycle(g.rows, alive, parity_only=False)
        if length > gamma:
            break
        cycle = _lexmin_cycle(g.rows, alive, int(length))
        removed.append(tuple(cycle))
        alive &= ~mask_of(cycle)
    sub, survivors = g.induced_subgraph(bits(alive))
    return CycleRemoval(sub, survivors, removed)


def gap_instance(h: Graph, params: BlowupParams) -> tuple[Graph, dict]:
    """Blow up ``h`` and strip every cycle of length at most ``params.gamma``.

    The report carries the parameter echo, removal counts, per-class
    survivors, and the asymptotic reference values.
    """
    rng = make_rng(params.seed)
    big = blowup(h, params.s, params.p, rng)
    res = remove_short_cycles(big, params.gamma)
    survivors = [0] * h.n
    for x in res.survivors:
        survivors[x // params.s] += 1
    report = {
        "kind": "gap",
        "base_n": h.n,
        "base_m": h.m,
        "s": params.s,
        "p": params.p,
        "gamma": params.gamma,
        "seed": params.seed,
        "n_before": big.n,
        "m_before": big.m,
        "n_after": res.graph.n,
        "m_after": res.graph.m,
        "removed_cycles": len(res.removed_cycles),
        "removed_vertices": res.removed_vertices,
        "cycle_lengths": sorted({len(c) for c in res.removed_cycles}),
        "class_survivors": survivors,
        **params.reference(h.n),
    }
    return res.graph, report


# -- processes -------------------------------------------------------------------


def triangle_free_process(n: int, rng) -> Graph:
    """Insert the pairs of ``K_n`` in uniformly random order, skipping any pair
    that would close a triangle.  The result is maximal triangle-free."""
    return clique_free_process(n, 3, rng)


def clique_free_process(n: int, t: int, rng) -> Graph:
    """Random maximal ``K_t``-free graph: random pair order, skip pairs that close a ``K_t``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if t < 2:
        raise ValueError("t must be at least 2")
    rng = make_rng(rng)
    pairs = list(combinations(range(n), 2))
    rows = [0] * n
    for k in rng.permutation(len(pairs)):
        u, v = pairs[int(k)]
        if not _has_clique(rows, rows[u] & rows[v], t - 2):
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def _has_clique(rows, cand: int, size: int) -> bool:
    if size <= 0:
        return True
    if cand.bit_count() < size:
        return False
    for v in bits(cand):
        cand &= ~(1 << v)
        if _has_clique(rows, cand & rows[v], size - 1):
            return True
    return False


def gnp(n: int, p: float, rng) -> Graph:
    """Erdos-Renyi graph; pairs drawn in lexicographic order."""
    rng = make_rng(rng)
    pairs = list(combinations(range(n), 2))
    draws = rng.random(len(pairs)) < p
    return Graph.from_edges(n, [pairs[i] for i in np.flatnonzero(draws)])


def random_cograph(n: int, rng, join_prob: float = 0.5) -> Graph:
    """Random P4-free graph from a random cotree with ``n`` leaves."""
    rng = make_rng(rng)
    rows = [0] * n

    def build(vertices: list[int]) -> None:
        if len(vertices) == 1:
            return
        k = int(rng.integers(1, len(vertices)))
        left, right = vertices[:k], vertices[k:]
        build(left)
        build(right)
        if rng.random() < join_prob:
            lm, rm = mask_of(left), mask_of(right)
            for x in left:
                rows[x] |= rm
            for y in right:
                rows[y] |= lm

    order = [int(v) for v in rng.permutation(n)]
    if n:
        build(order)
    return Graph(n, tuple(rows))


# -- intersection --------------------------------------------------------------------


def intersect(g: Graph, g2: Graph) -> Graph:
    """Keep the edges present in both graphs (identity vertex mapping)."""
    if g.n != g2.n:
        raise ValueError(f"vertex counts differ: {g.n} vs {g2.n}")
    return Graph(g.n, tuple(a & b for a, b in zip(g.rows, g2.rows)))


@dataclass(frozen=True)
class ScanResult:
    """Outcome of a search for disjoint equal-size sets with no edges between them.

    ``witness`` is ``None`` when nothing was found; ``exhaustive`` tells whether
    that absence is certain or only holds for the ``checked`` sampled sets.
    """

    witness: tuple[tuple[int, ...], tuple[int, ...]] | None
    exhaustive: bool
    checked: int
    total: int

    @property
    def coverage(self) -> float:
        return self.checked / self.total if self.total else 1.0


def biclique_complement_scan(g: Graph, size: int, rng=None, samples: int = 100_000) -> ScanResult:
    """Look for disjoint ``A``, ``B`` with ``|A| = |B| = size`` and no ``A``-``B`` edge.

    Exhaustive over ``A`` in lexicographic order when ``C(n, size)**2 <= 10**7``
    (``B`` is then the lowest ``size`` vertices outside ``A`` with no neighbor
    in it); otherwise ``samples`` random sets ``A`` are tried.
    """
    if size < 1:
        raise ValueError("size must be positive")
    total = math.comb(g.n, size)

    def try_a(a: tuple[int, ...]) -> tuple[int, ...] | None:
        amask = mask_of(a)
        blocked = amask
        for v in a:
            blocked |= g.rows[v]
        free = g.vertex_mask & ~blocked
        if free.bit_count() >= size:
            return tuple(list(bits(free))[:size])
        return None

    if 2 * size > g.n:
        return ScanResult(None, True, 0, total)
    if total**2 <= 10**7:
        checked = 0
        for a in combinations(range(g.n), size):
            checked += 1
            b = try_a(a)
            if b is not None:
                return ScanResult((a, b), True, checked, total)
        return ScanResult(None, True, checked, total)

    rng = make_rng(rng)
    seen: set[tuple[int, ...]] = set()
    for _ in range(samples):
        a = tuple(sorted(int(x) for x in rng.choice(g.n, size, replace=False)))
        if a in seen:
            continue
        seen.add(a)
        b = try_a(a)
        if b is not None:
            return ScanResult((a, b), False, len(seen), total)
    return ScanResult(None, False, len(seen), total)
