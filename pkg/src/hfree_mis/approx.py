"""Approximation algorithms for independent sets in H-free graphs.

Every algorithm returns a :class:`Solution` whose certificate records which
branch produced it and the quantities the corresponding guarantee is stated
in, so callers can re-check the guarantee against an exact answer.

Tie-breaking is by lowest vertex index throughout; the only randomness is
the explicitly seeded sampling of :func:`substitution_approx` and the start
vertex of :func:`local_search`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Union

from .exact import cograph_solve, max_independent_set
from .generators import make_rng
from .graph import Graph, bits, mask_of
from .patterns import Pattern, ceil_pow, contains_induced, count_induced, find_candidates, pattern_by_name


class ContractViolation(RuntimeError):
    """A plug-in (oracle, base algorithm, solver) broke its promised contract."""


# -- certificates -----------------------------------------------------------------


@dataclass(frozen=True)
class ReturnedSet:
    """The set came straight out of a sub-call large enough to be returned."""

    branch: str
    trace: tuple = ()
    tag = "is-returned"


@dataclass(frozen=True)
class Singleton:
    """Loop exhausted: a single vertex is returned.

    ``clique_partition`` and ``residual`` (wrapper) or ``trace`` (substitution)
    describe the partition that bounds the optimum.
    """

    clique_partition: tuple[tuple[int, ...], ...] = ()
    residual: tuple[int, ...] = ()
    trace: tuple = ()
    tag = "singleton"


@dataclass(frozen=True)
class CombLeaf:
    """Winning leaf of the peeling comb: peeled ``path`` plus the base solution ``leaf_set``."""

    path: tuple[int, ...]
    leaf_set: tuple[int, ...]
    leaves: int
    tag = "comb-leaf"


@dataclass(frozen=True)
class LocalOpt:
    t: int
    start: int
    improvements: int
    tag = "local-opt"


@dataclass(frozen=True)
class Fail:
    trace: tuple = ()
    tag = "fail"


@dataclass(frozen=True)
class GreedyRun:
    tag = "greedy"


@dataclass(frozen=True)
class RamseyRun:
    """Vertices whose neighborhoods were entered, and how the last level was solved."""

    pivots: tuple[int, ...]
    finish: str
    tag = "ramsey"


Certificate = Union[ReturnedSet, Singleton, CombLeaf, LocalOpt, Fail, GreedyRun, RamseyRun]


@dataclass(frozen=True)
class Solution:
    vertices: tuple[int, ...]
    algorithm: str
    certificate: Certificate

    @property
    def size(self) -> int:
        return len(self.vertices)

    @property
    def tag(self) -> str:
        return self.certificate.tag

    @property
    def failed(self) -> bool:
        return isinstance(self.certificate, Fail)


# -- solver plug-ins ----------------------------------------------------------------


@dataclass(frozen=True)
class Solver:
    """An approximation algorithm for ``pattern``-free graphs.

    ``epsilon`` is the exponent of its guarantee: on ``n`` vertices it is an
    ``n**(1 - epsilon)``-approximation.  Exact algorithms declare 1.
    """

    name: str
    func: Callable[[Graph], Iterable[int] | Solution]
    epsilon: float
    pattern: Pattern | None = None

    def __call__(self, g: Graph) -> tuple[int, ...]:
        return _run_base(self.func, g, self.name)


def _run_base(func, g: Graph, name: str = "base") -> tuple[int, ...]:
    out = func(g)
    if isinstance(out, Solution):
        out = out.vertices
    out = tuple(sorted(set(out)))
    if any(not 0 <= v < g.n for v in out) or not g.is_independent(out):
        raise ContractViolation(f"{name} returned a set that is not independent")
    return out


def exact_on_edgeless(g: Graph) -> tuple[int, ...]:
    """Every vertex; valid only because the input has no edges."""
    if g.m:
        raise ContractViolation(f"exact-on-edgeless called on a graph with {g.m} edges")
    return tuple(range(g.n))


EDGELESS_EXACT = Solver("exact-edgeless", exact_on_edgeless, 1.0, pattern_by_name("K2"))


def ramsey_solver(t: int) -> Solver:
    if t == 2:
        return EDGELESS_EXACT
    return Solver(f"ramsey{t}", lambda g: ramsey_is(g, t), 1 / (t - 1), pattern_by_name(f"K{t}"))


def exact_solver(budget: int = 10**6) -> Solver:
    return Solver("exact", lambda g: max_independent_set(g, budget).best, 1.0)


def default_solver(pattern: Pattern) -> Solver:
    """Ramsey extraction for cliques, the exact oracle otherwise."""
    g = pattern.graph
    if g.m == g.n * (g.n - 1) // 2 and g.n >= 2:
        return ramsey_solver(g.n)
    if g.n == 1:
        return Solver("k1-free", lambda h: (), 1.0, pattern)
    return exact_solver()


# -- simple algorithms ----------------------------------------------------------------


def _greedy_mask(rows, left: int) -> list[int]:
    chosen = []
    while left:
        v = min(bits(left), key=lambda v: ((rows[v] & left).bit_count(), v))
        chosen.append(v)
        left &= ~(rows[v] | (1 << v))
    return chosen


def greedy_min_degree(g: Graph) -> Solution:
    """Repeatedly take a minimum-degree vertex (lowest index) and delete its closed neighborhood."""
    return Solution(tuple(sorted(_greedy_mask(g.rows, g.vertex_mask))), "greedy", GreedyRun())


def ramsey_is(g: Graph, t: int) -> Solution:
    """Independent set in a ``K_t``-free graph via the classical Ramsey argument.

    With ``k`` live vertices, if some vertex has at least ``k**((t-2)/(t-1))``
    neighbors, descend into its neighborhood (which is ``K_{t-1}``-free);
    otherwise finish with min-degree greedy.  At ``t = 2`` the live set must be
    edgeless and is returned whole.  The result has at least
    ``n**(1/(t-1)) / 2`` vertices.
    """
    if t < 2:
        raise ValueError("t must be at least 2")
    rows = g.rows
    live = g.vertex_mask
    pivots = []
    level = t
    while True:
        if level == 2:
            if any(rows[v] & live for v in bits(live)):
                raise ContractViolation("graph is not K_t-free: an edge survived in the last neighborhood")
            chosen, finish = list(bits(live)), "edgeless"
            break
        size = live.bit_count()
        if size == 0:
            chosen, finish = [], "empty"
            break
        pivot = max(bits(live), key=lambda v: ((rows[v] & live).bit_count(), -v))
        if (rows[pivot] & live).bit_count() >= size ** ((level - 2) / (level - 1)):
            pivots.append(pivot)
            live &= rows[pivot]
            level -= 1
        else:
            chosen, finish = _greedy_mask(rows, live), "greedy"
            break
    return Solution(tuple(sorted(chosen)), f"ramsey{t}", RamseyRun(tuple(pivots), finish))


# -- constructive Erdos-Hajnal wrapper ------------------------------------------------------


@dataclass(frozen=True)
class EHParams:
    """Exponent ``delta`` of the clique-or-independent-set oracle.

    The wrapper is then an ``n**(1 - (delta - delta**2) + epsilon)``-approximation.
    """

    delta: float = 0.5
    epsilon: float = 0.01

    def __post_init__(self) -> None:
        if not 0 < self.delta <= 0.5:
            raise ValueError("delta must lie in (0, 1/2]")
        if self.epsilon <= 0:
            raise ValueError("epsilon must be positive")

    @property
    def improvement(self) -> float:
        return self.delta - self.delta**2 - self.epsilon


def cograph_eh_oracle(j: Graph) -> tuple[int, ...]:
    """Larger of a maximum clique and a maximum independent set of a cograph.

    Ties return the clique.  Since cographs are perfect, ``alpha * omega >= n``
    and the answer has at least ``sqrt(n)`` vertices.
    """
    out = cograph_solve(j)
    if out is None:
        raise ContractViolation("oracle input is not a cograph")
    alpha, omega = out
    return omega if len(omega) >= len(alpha) else alpha


def eh_wrapper(g: Graph, oracle: Callable[[Graph], Iterable[int]] = cograph_eh_oracle,
               params: EHParams = EHParams()) -> Solution:
    """Peel cliques found by ``oracle`` until it returns an independent set.

    While at least ``ceil(n**(1-delta))`` vertices remain, ask the oracle for a
    clique or independent set of size ``>= k**delta`` in the remaining graph.
    An independent set is returned immediately; a clique is removed.  When the
    loop ends, one vertex is returned together with the clique partition and
    the residual vertices, which bound the optimum by ``q + |residual|``.
    """
    n = g.n
    if n == 0:
        return Solution((), "eh", Singleton())
    delta = params.delta
    guard = ceil_pow(n, 1 - delta)
    live = g.vertex_mask
    cliques: list[tuple[int, ...]] = []
    while live.bit_count() >= guard:
        size = live.bit_count()
        sub, back = g.induced_subgraph(bits(live))
        local = sorted(set(oracle(sub)))
        if any(not 0 <= v < sub.n for v in local):
            raise ContractViolation("oracle returned an out-of-range vertex")
        x = tuple(back[v] for v in local)
        if len(x) < size**delta - 1e-9:
            raise ContractViolation(f"oracle returned {len(x)} vertices, fewer than {size}**{delta}")
        if g.is_independent(x):
            return Solution(x, "eh", ReturnedSet("oracle-independent"))
        if not g.is_clique(x):
            raise ContractViolation("oracle returned neither a clique nor an independent set")
        cliques.append(x)
        live &= ~mask_of(x)
    return Solution((0,), "eh", Singleton(tuple(cliques), tuple(bits(live))))


# -- universal-vertex peeling ---------------------------------------------------------------


def _peel(g: Graph, base) -> tuple[tuple[int, ...], CombLeaf]:
    rows = g.rows
    live = g.vertex_mask
    path: list[int] = []
    best: tuple[int, ...] | None = None
    cert = CombLeaf((), (), 1)
    leaves = 0
    while live:
        v = (live & -live).bit_length() - 1
        sub, back = g.induced_subgraph(bits(rows[v] & live))
        leaf = tuple(back[u] for u in _run_base(base, sub))
        leaves += 1
        if best is None or len(path) + len(leaf) > len(best):
            best = tuple(sorted(path + list(leaf)))
            cert = CombLeaf(tuple(path), leaf, 0)
        path.append(v)
        live &= ~(rows[v] | (1 << v))
    leaves += 1
    if best is None or len(path) > len(best):
        best = tuple(sorted(path))
        cert = CombLeaf(tuple(path), (), 0)
    return best, CombLeaf(cert.path, cert.leaf_set, leaves)


def universal_peel(g: Graph, base) -> Solution:
    """Lift an algorithm for H-free graphs to graphs without H plus a universal vertex.

    Walks a comb: at each step the lowest-index live vertex ``v`` is peeled,
    ``base`` runs on the live part of ``N(v)`` (which is H-free), and that
    leaf's candidate is the peeled path plus the base solution.  After ``v``
    the closed neighborhood ``N[v]`` is deleted.  The best leaf is returned.
    If ``base`` is an ``OPT**g``-approximation this is an
    ``OPT**(1/(2-g))``-approximation.
    """
    best, cert = _peel(g, base)
    return Solution(best, "peel", cert)


def peel_iterate(g: Graph, base=EDGELESS_EXACT, t: int = 1) -> Solution:
    """``t`` nested universal-vertex peelings over ``base``.

    With the edgeless-exact base this handles ``K_{t+1}``-free graphs and
    returns at least ``alpha**(1/(t+1))`` vertices.
    """
    if t < 1:
        raise ValueError("t must be at least 1")
    level = base
    for _ in range(t - 1):
        level = _nest(level)
    best, cert = _peel(g, level)
    return Solution(best, f"peel{t}", cert)


def _nest(base):
    return lambda j: _peel(j, base)[0]


# -- local search -----------------------------------------------------------------------


def local_search(g: Graph, t: int = 2, seed: int | None = None) -> Solution:
    """``t``-local search started from a single vertex.

    Repeatedly applies the first improving swap: drop ``X`` from the solution,
    add ``Y`` from outside, ``|X| < |Y| <= t``.  Swaps are scanned by ``|X|``,
    then ``X`` lexicographically, then ``|Y|``, then ``Y`` lexicographically.
    The start vertex is 0, or drawn uniformly when ``seed`` is given.
    """
    if t not in (2, 3):
        raise ValueError("local search supports t in {2, 3}")
    n = g.n
    if n == 0:
        return Solution((), f"ls{t}", LocalOpt(t, -1, 0))
    start = 0 if seed is None else int(make_rng(seed).integers(n))
    rows = g.rows
    sol = 1 << start
    improvements = 0
    while True:
        swap = _first_improving_swap(rows, g.vertex_mask, sol, t)
        if swap is None:
            break
        xmask, ymask = swap
        sol = (sol & ~xmask) | ymask
        improvements += 1
    return Solution(tuple(bits(sol)), f"ls{t}", LocalOpt(t, start, improvements))


def _first_improving_swap(rows, full: int, sol: int, t: int) -> tuple[int, int] | None:
    members = list(bits(sol))
    for xsize in range(t):
        for xs in combinations(members, xsize):
            xmask = mask_of(xs)
            blocked = sol
            for v in members:
                if not (xmask >> v) & 1:
                    blocked |= rows[v]
            free = list(bits(full & ~blocked))
            for ysize in range(xsize + 1, t + 1):
                for ys in combinations(free, ysize):
                    ymask = mask_of(ys)
                    if all(rows[y] & ymask == 0 for y in ys):
                        return xmask, ymask
    return None


# -- substitution ----------------------------------------------------------------------


@dataclass(frozen=True)
class SubstitutionParams:
    """Exponents for the substitution algorithm; everything derives from ``epsilon``.

    ``gamma = epsilon/(2 n1)``, ``eta = min(1 - epsilon, gamma)`` and
    ``delta = epsilon*eta / (2 + epsilon*eta)``; the algorithm is an
    ``O(n**(1 - delta))``-approximation.
    """

    epsilon: float
    n1: int
    n2: int

    def __post_init__(self) -> None:
        if not 0 < self.epsilon <= 0.99:
            raise ValueError("epsilon must lie in (0, 0.99]")
        if self.n1 < 1 or self.n2 < 1:
            raise ValueError("pattern sizes must be positive")

    @classmethod
    def from_solvers(cls, solver1: Solver, solver2: Solver, n1: int, n2: int) -> SubstitutionParams:
        return cls(min(solver1.epsilon, solver2.epsilon, 0.99), n1, n2)

    @property
    def gamma(self) -> float:
        return self.epsilon / (2 * self.n1)

    @property
    def eta(self) -> float:
        return min(1 - self.epsilon, self.gamma)

    @property
    def delta(self) -> float:
        e = self.epsilon * self.eta
        return e / (2 + e)


@dataclass(frozen=True)
class SubstitutionStep:
    """One loop iteration: which branch ran, on how many vertices, and what it found."""

    branch: str  # "few-copies" or "many-copies"
    live: int
    copies: int
    cap: int
    x: tuple[int, ...]
    w: tuple[int, ...]
    kernel: tuple[int, ...] = ()
    attempts: int = 1
    h1_free: bool = True


def substitution_approx(
    g: Graph,
    h1: Pattern,
    h2: Pattern,
    solver1: Solver,
    solver2: Solver,
    params: SubstitutionParams | None = None,
    seed=None,
    mode: str = "faithful",
    retries: int = 3,
) -> Solution:
    """Approximate MIS in graphs free of ``h2`` substituted into the root of ``h1``.

    While at least ``ceil(n**(1-delta))`` vertices ``V`` remain:

    * fewer than ``|V|**(n1-eps)`` copies of ``h1``: sample ``ceil(|V|**gamma)``
      vertices uniformly; if they induce a copy of ``h1`` return a fail
      (``mode="faithful"``) or resample up to ``retries`` times
      (``mode="retry"``); otherwise run ``solver1`` on the sample;
    * otherwise: take a kernel with at least ``ceil(|V|**(1-eps))``
      extensions; the extensions induce an ``h2``-free graph, run ``solver2``.

    A solver answer of at least ``ceil(n**delta)`` vertices is returned at once;
    otherwise the sampled/extension set is deleted from ``V``.  When the loop
    ends a single vertex is returned with the full trace.
    """
    if h1.root is None:
        raise ValueError("h1 needs a root")
    if mode not in ("faithful", "retry"):
        raise ValueError(f"unknown mode {mode!r}")
    if params is None:
        params = SubstitutionParams.from_solvers(solver1, solver2, h1.n, h2.n)
    if params.n1 != h1.n:
        raise ValueError("params.n1 does not match h1")
    name = "subst"
    n = g.n
    if n == 0:
        return Solution((), name, Singleton())
    rng = make_rng(seed)
    eps, n1 = params.epsilon, h1.n
    guard = ceil_pow(n, 1 - params.delta)
    target = ceil_pow(n, params.delta)
    live = g.vertex_mask
    trace: list[SubstitutionStep] = []

    while live.bit_count() >= guard:
        size = live.bit_count()
        sub, back = g.induced_subgraph(bits(live))
        cap = ceil_pow(size, n1 - eps)
        copies = count_induced(sub, h1, cap)
        if copies < cap:
            k = min(size, ceil_pow(size, params.gamma))
            attempts = 0
            while True:
                attempts += 1
                pick = sorted(int(v) for v in rng.choice(size, k, replace=False))
                sample, _ = sub.induced_subgraph(pick)
                if not contains_induced(sample, h1):
                    break
                if mode == "faithful" or attempts > retries:
                    x = tuple(back[v] for v in pick)
                    trace.append(SubstitutionStep("few-copies", size, copies, cap, x, (), (), attempts, False))
                    return Solution((), name, Fail(tuple(trace)))
            x = tuple(back[v] for v in pick)
            w = tuple(sorted(x[v] for v in solver1(sample)))
            trace.append(SubstitutionStep("few-copies", size, copies, cap, x, w, (), attempts))
            if len(w) >= target:
                return Solution(w, name, ReturnedSet("h1-sample", tuple(trace)))
        else:
            witness = find_candidates(sub, h1, ceil_pow(size, 1 - eps))
            if witness is None:
                raise RuntimeError("no candidate kernel despite many copies; counting is inconsistent")
            x = tuple(back[v] for v in witness.extensions)
            cand, _ = sub.induced_subgraph(witness.extensions)
            w = tuple(sorted(x[v] for v in solver2(cand)))
            kernel = tuple(back[v] for v in witness.kernel)
            trace.append(SubstitutionStep("many-copies", size, copies, cap, x, w, kernel))
            if len(w) >= target:
                return Solution(w, name, ReturnedSet("h2-candidates", tuple(trace)))
        live &= ~mask_of(x)

    return Solution((0,), name, Singleton(residual=tuple(bits(live)), trace=tuple(trace)))
