"""Immutable simple graphs on vertices ``0..n-1`` with bitset adjacency rows.

Row ``u`` is a Python int whose bit ``v`` is set iff ``uv`` is an edge, so an
adjacency test is a shift-and-mask and neighborhood intersections are a single
``&``.  Every transform returns a fresh :class:`Graph`.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence


class ParseError(ValueError):
    """Malformed graph text; the message names the offending line."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph.

    ``rows[u]`` is the neighborhood bitmask of ``u``.  Construction checks
    symmetry, absence of loops and index range, so every instance that exists
    is a valid simple graph.
    """

    n: int
    rows: tuple[int, ...]
    label: str | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("negative vertex count")
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"vertex {u} has a neighbor index >= n")
            if (row >> u) & 1:
                raise ValueError(f"loop at vertex {u}")
            for v in bits(row):
                if not (self.rows[v] >> u) & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    # -- construction -----------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], label: str | None = None) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows), label)

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    # -- queries ----------------------------------------------------------

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, u: int) -> list[int]:
        return list(bits(self.rows[u]))

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """All edges ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in bits(self.rows[u] >> (u + 1) << (u + 1))]

    def is_independent(self, vertices: Iterable[int]) -> bool:
        m = mask_of(vertices)
        return all(self.rows[v] & m == 0 for v in bits(m))

    def is_clique(self, vertices: Iterable[int]) -> bool:
        m = mask_of(vertices)
        return all((m & ~(1 << v)) & ~self.rows[v] == 0 for v in bits(m))

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """Subgraph induced by ``vertices``, relabelled ``0..k-1`` in increasing order.

        Returns the subgraph and the list mapping new indices to old ones.
        """
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            rows.append(mask_of(index[w] for w in bits(self.rows[v]) if w in index))
        return Graph(len(keep), tuple(rows)), keep

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    def __repr__(self) -> str:
        name = f" {self.label!r}" if self.label else ""
        return f"<Graph{name} n={self.n} m={self.m}>"


# -- named graphs -------------------------------------------------------------


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << u) for u in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner, label="petersen")


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return Graph.from_edges(offset, edges)


def join(*graphs: Graph) -> Graph:
    """Disjoint union plus every edge between different operands."""
    union = disjoint_union(*graphs)
    edges = union.edges()
    starts = [0]
    for g in graphs:
        starts.append(starts[-1] + g.n)
    for i in range(len(graphs)):
        for j in range(i + 1, len(graphs)):
            edges.extend((u, v) for u in range(starts[i], starts[i + 1]) for v in range(starts[j], starts[j + 1]))
    return Graph.from_edges(union.n, edges)


# -- text formats -------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"`` (0-based).

    Blank trailing lines are ignored.  Loops, duplicate edges, out-of-range
    endpoints, a wrong edge count or malformed lines raise :class:`ParseError`
    naming the 1-based line number.
    """
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise ParseError("empty input, expected header 'n m' at line 1")
    n, m = _two_ints(lines[0], 1)
    if n < 0 or m < 0:
        raise ParseError(f"negative count at line 1: {lines[0]!r}")
    if len(lines) - 1 != m:
        raise ParseError(f"header at line 1 announces {m} edges, found {len(lines) - 1} edge lines")
    rows = [0] * n
    for lineno, line in enumerate(lines[1:], start=2):
        u, v = _two_ints(line, lineno)
        _add_checked(rows, n, u, v, lineno)
    return Graph(n, tuple(rows))


def parse_dimacs(text: str) -> Graph:
    """Parse DIMACS ``.col`` text: ``c`` comments, ``p edge n m``, ``e u v`` (1-based)."""
    n = None
    rows: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if n is not None:
                raise ParseError(f"second problem line at line {lineno}")
            if len(parts) != 4:
                raise ParseError(f"malformed problem line at line {lineno}: {raw!r}")
            try:
                n = int(parts[2])
            except ValueError:
                raise ParseError(f"malformed problem line at line {lineno}: {raw!r}") from None
            rows = [0] * n
        elif parts[0] == "e":
            if n is None:
                raise ParseError(f"edge before problem line at line {lineno}")
            if len(parts) != 3:
                raise ParseError(f"malformed edge line at line {lineno}: {raw!r}")
            try:
                u, v = int(parts[1]) - 1, int(parts[2]) - 1
            except ValueError:
                raise ParseError(f"malformed edge line at line {lineno}: {raw!r}") from None
            _add_checked(rows, n, u, v, lineno)
        else:
            raise ParseError(f"unknown line type at line {lineno}: {raw!r}")
    if n is None:
        raise ParseError("missing 'p edge n m' line")
    return Graph(n, tuple(rows))


def parse_graph(text: str) -> Graph:
    """Dispatch on the first non-blank line: DIMACS if it starts with ``c`` or ``p``."""
    for line in text.splitlines():
        head = line.split()
        if head:
            if head[0] in ("c", "p"):
                return parse_dimacs(text)
            break
    return parse_edge_list(text)


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    out = [f"{g.n} {len(edges)}"]
    out.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(out) + "\n"


def read_graph(path) -> Graph:
    with open(path, encoding="utf-8") as f:
        return parse_graph(f.read())


def write_graph(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(format_edge_list(g))


def _two_ints(line: str, lineno: int) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise ParseError(f"expected two integers at line {lineno}: {line!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(f"expected two integers at line {lineno}: {line!r}") from None


def _add_checked(rows: list[int], n: int, u: int, v: int, lineno: int) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise ParseError(f"vertex index out of range at line {lineno}: {u} {v} (n={n})")
    if u == v:
        raise ParseError(f"loop at line {lineno}")
    if (rows[u] >> v) & 1:
        raise ParseError(f"duplicate edge at line {lineno}: {u} {v}")
    rows[u] |= 1 << v
    rows[v] |= 1 << u


# -- transforms ---------------------------------------------------------------


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple(full & ~row & ~(1 << u) for u, row in enumerate(g.rows)))


def subdivide_even(g: Graph, c: int) -> Graph:
    """Replace every edge by a path with ``2c`` internal vertices.

    Edges are processed in sorted order and the new vertices of each edge are
    appended contiguously, ``u`` side first.  The independence number grows by
    exactly ``c`` per edge.
    """
    if c < 0:
        raise ValueError("c must be non-negative")
    if c == 0:
        return g
    edges: list[tuple[int, int]] = []
    nxt = g.n
    for u, v in g.edges():
        chain = [u, *range(nxt, nxt + 2 * c), v]
        nxt += 2 * c
        edges.extend(zip(chain, chain[1:]))
    return Graph.from_edges(nxt, edges)


def lex_product(g: Graph, h: Graph) -> Graph:
    """Lexicographic product; vertex ``(u, x)`` gets index ``u * h.n + x``."""
    if g.n == 0 or h.n == 0:
        raise ValueError("lexicographic product needs two nonempty graphs")
    k = h.n
    block = (1 << k) - 1
    rows = []
    for u in range(g.n):
        outer = 0
        for v in bits(g.rows[u]):
            outer |= block << (v * k)
        for x in range(k):
            rows.append(outer | (h.rows[x] << (u * k)))
    return Graph(g.n * k, tuple(rows))


def _shortest_cycle(rows: Sequence[int], alive: int, parity_only: bool) -> float:
    best = math.inf
    for root in bits(alive):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            du = dist[u]
            # cycles closed from level du have length >= 2du (odd ones: 2du+1)
            if (2 * du + 1 if parity_only else 2 * du) >= best:
                break
            for w in bits(rows[u] & alive):
                if w not in dist:
                    dist[w] = du + 1
                    parent[w] = u
                    queue.append(w)
                elif parity_only:
                    if dist[w] == du:
                        best = min(best, 2 * du + 1)
                elif w != parent[u]:
                    best = min(best, du + dist[w] + 1)
    return best


def girth(g: Graph) -> float:
    """Length of a shortest cycle, or ``math.inf`` for a forest.

    This is the shortest cycle, not the shortest induced cycle; the two minima
    coincide.
    """
    return _shortest_cycle(g.rows, g.vertex_mask, parity_only=False)


def odd_girth(g: Graph) -> float:
    """Length of a shortest odd cycle, or ``math.inf`` for a bipartite graph."""
    return _shortest_cycle(g.rows, g.vertex_mask, parity_only=True)
