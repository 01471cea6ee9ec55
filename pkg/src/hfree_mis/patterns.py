"""Induced copies of small forbidden patterns.

All searches go through one backtracking enumerator of *induced* embeddings
(injective maps preserving both adjacency and non-adjacency).  Copies are
counted as vertex subsets, i.e. embeddings divided by the number of pattern
automorphisms.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterator

from .graph import (
    Graph,
    bits,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    mask_of,
    parse_edge_list,
    path_graph,
)

MAX_PATTERN_SIZE = 10


class PatternTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class Pattern:
    """A forbidden graph on 1 to 10 vertices, optionally with a root vertex.

    The root is the vertex that gets replaced when another pattern is
    substituted into this one.
    """

    graph: Graph
    root: int | None = None
    name: str | None = None

    def __post_init__(self) -> None:
        if not 1 <= self.graph.n <= MAX_PATTERN_SIZE:
            raise PatternTooLarge(f"pattern must have 1..{MAX_PATTERN_SIZE} vertices, got {self.graph.n}")
        if self.root is not None and not 0 <= self.root < self.graph.n:
            raise ValueError(f"root {self.root} out of range")

    @property
    def n(self) -> int:
        return self.graph.n

    def with_root(self, root: int | None) -> Pattern:
        return Pattern(self.graph, root, self.name)

    @cached_property
    def automorphisms(self) -> int:
        return sum(1 for _ in induced_embeddings(self.graph, self.graph))

    def __str__(self) -> str:
        return self.name or f"pattern(n={self.n}, m={self.graph.m})"


@dataclass(frozen=True)
class CandidateWitness:
    """``kernel`` induces the pattern minus its root; each extension completes it."""

    kernel: tuple[int, ...]
    extensions: tuple[int, ...]


def _as_pattern(h: Pattern | Graph) -> Pattern:
    return h if isinstance(h, Pattern) else Pattern(h)


def _search_order(p: Graph) -> list[int]:
    # highest degree first, then most already-placed neighbors
    if p.n == 0:
        return []
    order = [max(range(p.n), key=lambda v: (p.degree(v), -v))]
    placed = 1 << order[0]
    while len(order) < p.n:
        rest = [v for v in range(p.n) if not (placed >> v) & 1]
        v = max(rest, key=lambda v: ((p.rows[v] & placed).bit_count(), p.degree(v), -v))
        order.append(v)
        placed |= 1 << v
    return order


def induced_embeddings(pattern: Graph, host: Graph, allowed: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield every induced embedding of ``pattern`` into ``host``.

    Each result maps pattern vertex ``i`` to host vertex ``result[i]``.  Only
    host vertices in the ``allowed`` bitmask are used.
    """
    k = pattern.n
    if allowed is None:
        allowed = host.vertex_mask
    if k == 0:
        yield ()
        return
    order = _search_order(pattern)
    pos = {v: i for i, v in enumerate(order)}
    adj_prev = [[pos[w] for w in bits(pattern.rows[v]) if pos[w] < i] for i, v in enumerate(order)]
    non_prev = [[j for j in range(i) if not pattern.has_edge(v, order[j])] for i, v in enumerate(order)]

    # degree filters inside the allowed region
    deg_ok: dict[tuple[int, int], int] = {}
    for v in order:
        key = (pattern.degree(v), k - 1 - pattern.degree(v))
        if key not in deg_ok:
            d_in, d_out = key
            m = 0
            size = allowed.bit_count()
            for x in bits(allowed):
                dx = (host.rows[x] & allowed).bit_count()
                if dx >= d_in and size - 1 - dx >= d_out:
                    m |= 1 << x
            deg_ok[key] = m
    start = [deg_ok[(pattern.degree(v), k - 1 - pattern.degree(v))] for v in order]

    image = [0] * k
    rows = host.rows

    def extend(i: int, used: int) -> Iterator[tuple[int, ...]]:
        cand = start[i] & ~used
        for j in adj_prev[i]:
            cand &= rows[image[j]]
        for j in non_prev[i]:
            cand &= ~rows[image[j]]
        for x in bits(cand):
            image[i] = x
            if i + 1 == k:
                out = [0] * k
                for t, v in enumerate(order):
                    out[v] = image[t]
                yield tuple(out)
            else:
                yield from extend(i + 1, used | (1 << x))

    yield from extend(0, 0)


def isomorphisms(g1: Graph, g2: Graph) -> Iterator[tuple[int, ...]]:
    if g1.n != g2.n or g1.m != g2.m:
        return iter(())
    return induced_embeddings(g1, g2)


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    return next(isomorphisms(g1, g2), None) is not None


def contains_induced(host: Graph, h: Pattern | Graph) -> bool:
    h = _as_pattern(h)
    return next(induced_embeddings(h.graph, host), None) is not None


def count_induced(host: Graph, h: Pattern | Graph, cap: int | None = None) -> int:
    """Number of vertex subsets of ``host`` inducing a copy of ``h``.

    Enumeration stops as soon as ``cap`` copies are seen; the result then
    equals ``cap``.
    """
    h = _as_pattern(h)
    aut = h.automorphisms
    limit = None if cap is None else cap * aut
    found = 0
    for _ in induced_embeddings(h.graph, host):
        found += 1
        if limit is not None and found >= limit:
            return cap
    return found // aut


def find_candidates(host: Graph, h1: Pattern, threshold: int) -> CandidateWitness | None:
    """Lexicographically first kernel with at least ``threshold`` extensions.

    A kernel is a vertex set inducing ``h1`` minus its root; an extension is a
    vertex ``x`` outside the kernel such that kernel + ``x`` induces ``h1`` with
    ``x`` playing the root.
    """
    if h1.root is None:
        raise ValueError("find_candidates needs a rooted pattern")
    core_vertices = [v for v in range(h1.n) if v != h1.root]
    core, _ = h1.graph.induced_subgraph(core_vertices)
    root_nbrs = [i for i, v in enumerate(core_vertices) if h1.graph.has_edge(v, h1.root)]

    # kernel -> admissible neighborhood masks (one per embedding of the core)
    masks_by_kernel: dict[tuple[int, ...], set[int]] = {}
    for emb in induced_embeddings(core, host):
        kernel = tuple(sorted(emb))
        masks_by_kernel.setdefault(kernel, set()).add(mask_of(emb[i] for i in root_nbrs))

    for kernel in sorted(masks_by_kernel):
        kmask = mask_of(kernel)
        ok = masks_by_kernel[kernel]
        ext = tuple(x for x in bits(host.vertex_mask & ~kmask) if host.rows[x] & kmask in ok)
        if len(ext) >= threshold:
            return CandidateWitness(kernel, ext)
    return None


def substitute(h1: Pattern, h2: Pattern | Graph) -> Pattern:
    """Replace the root of ``h1`` by a copy of ``h2``.

    Vertices of ``h1`` other than the root come first (in order), followed by
    the vertices of ``h2``.  Every ``h2`` vertex inherits the root's neighbors.
    """
    h2 = _as_pattern(h2)
    if h1.root is None:
        raise ValueError("substitution needs a rooted first pattern")
    size = h1.n + h2.n - 1
    if size > MAX_PATTERN_SIZE:
        raise PatternTooLarge(f"substituted pattern would have {size} vertices")
    keep = [v for v in range(h1.n) if v != h1.root]
    index = {v: i for i, v in enumerate(keep)}
    offset = len(keep)
    edges = [(index[u], index[v]) for u, v in h1.graph.edges() if u != h1.root and v != h1.root]
    edges += [(offset + u, offset + v) for u, v in h2.graph.edges()]
    for v in keep:
        if h1.graph.has_edge(v, h1.root):
            edges += [(index[v], offset + x) for x in range(h2.n)]
    name = f"{h1}[{h2}]" if h1.name and h2.name else None
    return Pattern(Graph.from_edges(size, edges), None, name)


def split_pattern(h: Pattern | Graph) -> tuple[Pattern, Pattern] | None:
    """Write ``h`` as a substitution ``(h1 rooted, h2)``, or ``None`` if ``h`` is prime.

    Uses the smallest nontrivial module, ties broken lexicographically; the
    module's lowest vertex stands in for it in ``h1``.
    """
    h = _as_pattern(h)
    g = h.graph
    for size in range(2, g.n):
        for module in combinations(range(g.n), size):
            mmask = mask_of(module)
            if all(g.rows[x] & mmask in (0, mmask) for x in bits(g.vertex_mask & ~mmask)):
                keep = sorted(set(range(g.n)) - set(module) | {module[0]})
                h1, _ = g.induced_subgraph(keep)
                h2, _ = g.induced_subgraph(module)
                return Pattern(h1, keep.index(module[0])), Pattern(h2)
    return None


# -- named patterns -----------------------------------------------------------


def spider(i: int, j: int, k: int) -> Graph:
    """Claw with legs of ``i``, ``j`` and ``k`` edges (a zero leg is absent)."""
    edges = []
    nxt = 1
    for length in (i, j, k):
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(nxt, edges)


_NAME_RE = [
    (re.compile(r"K_?\{?(\d+),(\d+)\}?"), lambda a, b: complete_bipartite(int(a), int(b))),
    (re.compile(r"K_?\{?(\d+)\}?"), lambda t: complete_graph(int(t))),
    (re.compile(r"P_?\{?(\d+)\}?"), lambda t: path_graph(int(t))),
    (re.compile(r"C_?\{?(\d+)\}?"), lambda t: cycle_graph(int(t))),
    (re.compile(r"S_?\{?(\d+),(\d+),(\d+)\}?"), lambda i, j, k: spider(int(i), int(j), int(k))),
    (re.compile(r"(?:edgeless|E)_?\{?(\d+)\}?"), lambda t: Graph.empty(int(t))),
    (re.compile(r"claw"), lambda: spider(1, 1, 1)),
    (re.compile(r"fork"), lambda: spider(1, 1, 2)),
]


def pattern_by_name(name: str) -> Pattern:
    """Resolve a registry name such as ``K4``, ``P5``, ``C6``, ``K2,3``, ``claw``,
    ``fork`` or ``S_{1,2,3}``.  A suffix ``@r`` sets the root to vertex ``r``."""
    base, _, root = name.strip().partition("@")
    for rx, build in _NAME_RE:
        match = rx.fullmatch(base)
        if match:
            graph = build(*match.groups())
            if graph.n > MAX_PATTERN_SIZE:
                raise PatternTooLarge(f"{name} has {graph.n} vertices")
            return Pattern(graph, int(root) if root else None, base)
    raise KeyError(f"unknown pattern name {name!r}")


def parse_pattern(text: str) -> Pattern:
    """Edge-list text with an optional trailing ``root r`` line."""
    lines = text.rstrip().splitlines()
    root = None
    if lines and lines[-1].split()[:1] == ["root"]:
        parts = lines.pop().split()
        if len(parts) != 2 or not parts[1].isdigit():
            raise ValueError(f"malformed root line: {' '.join(parts)!r}")
        root = int(parts[1])
    return Pattern(parse_edge_list("\n".join(lines)), root)


def ceil_pow(base: float, exponent: float) -> int:
    """``ceil(base ** exponent)``, ignoring float noise just above an integer."""
    return math.ceil(base**exponent - 1e-9)
