"""Graph and vertex-ordering types shared by every search and certifier.

Vertices are the integers 1..n throughout, both in memory and in the text
formats, so a position in an ordering doubles as a visiting date.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np


class ParseError(ValueError):
    """Malformed graph or ordering text; message names the offending line."""


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices 1..n, adjacency-list form.

    ``adjacency[v]`` lists the neighbors of v (out-neighbors when
    ``directed``).  Index 0 is unused.  Instances are immutable after
    construction and safe to share between threads.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    directed: bool = False
    _neighbor_sets: tuple[frozenset[int], ...] = field(
        init=False, repr=False, compare=False, default=()
    )

    def __post_init__(self):
        sets = (frozenset(),) + tuple(frozenset(a) for a in self.adjacency[1:])
        object.__setattr__(self, "_neighbor_sets", sets)

    @property
    def m(self) -> int:
        total = sum(len(a) for a in self.adjacency[1:])
        return total if self.directed else total // 2

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def adjacent(self, u: int, v: int) -> bool:
        return v in self._neighbor_sets[u]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._neighbor_sets[v]

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        """Vertices u with an arc u -> v (equals neighbors(v) when undirected)."""
        if not self.directed:
            return self.adjacency[v]
        return tuple(u for u in self.vertices() if v in self._neighbor_sets[u])

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], directed: bool = False) -> "Graph":
        """Build a graph from (u, v) pairs; duplicates collapse, self-loops are errors."""
        if n < 1:
            raise ValueError("vertex count must be at least 1")
        seen: set[tuple[int, int]] = set()
        adj: list[list[int]] = [[] for _ in range(n + 1)]
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u},{v}) out of range 1..{n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (u, v) if directed else (min(u, v), max(u, v))
            if key in seen:
                continue
            seen.add(key)
            adj[u].append(v)
            if not directed:
                adj[v].append(u)
        return cls(n=n, adjacency=tuple(tuple(a) for a in adj), directed=directed)

    def edges(self) -> list[tuple[int, int]]:
        """Edge list; (u, v) with u < v for undirected graphs, arcs otherwise."""
        if self.directed:
            return [(u, v) for u in self.vertices() for v in self.adjacency[u]]
        return [(u, v) for u in self.vertices() for v in self.adjacency[u] if u < v]

    def to_text(self) -> str:
        """Serialize in the edge-list format accepted by parse_graph."""
        es = self.edges()
        header = f"{self.n} {len(es)}" + (" directed" if self.directed else "")
        return "\n".join([header] + [f"{u} {v}" for u, v in es]) + "\n"


@dataclass(frozen=True)
class VertexOrdering:
    """A permutation sigma of 1..n with O(1) position lookup.

    ``order[i]`` is the vertex visited at date i+1; ``position[v]`` is the
    1-based date of vertex v (index 0 unused).
    """

    order: tuple[int, ...]
    position: tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self):
        n = len(self.order)
        pos = [0] * (n + 1)
        for i, v in enumerate(self.order, start=1):
            if not (1 <= v <= n) or pos[v]:
                raise ValueError(f"not a permutation of 1..{n}: {self.order}")
            pos[v] = i
        object.__setattr__(self, "position", tuple(pos))

    @property
    def n(self) -> int:
        return len(self.order)

    def vertex_at(self, i: int) -> int:
        """Vertex at 1-based position i."""
        return self.order[i - 1]

    def pos(self, v: int) -> int:
        return self.position[v]

    def before(self, u: int, v: int) -> bool:
        return self.position[u] < self.position[v]

    @classmethod
    def identity(cls, n: int) -> "VertexOrdering":
        return cls(tuple(range(1, n + 1)))

    def __iter__(self):
        return iter(self.order)

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.order)


def reverse_ordering(sigma: VertexOrdering) -> VertexOrdering:
    """The reversed ordering: position i maps to the vertex at position n+1-i."""
    return VertexOrdering(tuple(reversed(sigma.order)))


def parse_graph(text: str) -> Graph:
    """Parse an edge-list document.

    Line 1 is ``n m`` with an optional trailing ``directed`` token, followed
    by m lines ``u v``.  Duplicate edges collapse silently; self-loops and
    out-of-range endpoints are errors naming the line number.
    """
    lines = [(no, ln.strip()) for no, ln in enumerate(text.splitlines(), start=1)]
    lines = [(no, ln) for no, ln in lines if ln]
    if not lines:
        raise ParseError("line 1: empty document, expected 'n m' header")
    no, header = lines[0]
    parts = header.split()
    directed = False
    if parts and parts[-1].lower() == "directed":
        directed = True
        parts = parts[:-1]
    if len(parts) != 2:
        raise ParseError(f"line {no}: expected 'n m' header, got {header!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(f"line {no}: non-integer header fields in {header!r}") from None
    if n < 1:
        raise ParseError(f"line {no}: vertex count must be at least 1")
    if m < 0:
        raise ParseError(f"line {no}: negative edge count")
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"line {no}: header announces {m} edges, found {len(body)} edge lines")
    edges: list[tuple[int, int]] = []
    for no, ln in body:
        fields = ln.split()
        if len(fields) != 2:
            raise ParseError(f"line {no}: expected 'u v', got {ln!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"line {no}: non-integer endpoint in {ln!r}") from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"line {no}: vertex out of range 1..{n} in {ln!r}")
        if u == v:
            raise ParseError(f"line {no}: self-loop at vertex {u}")
        edges.append((u, v))
    return Graph.from_edges(n, edges, directed=directed)


def parse_ordering(text: str, n: int) -> VertexOrdering:
    """Parse a whitespace-separated permutation of 1..n."""
    try:
        values = [int(tok) for tok in text.split()]
    except ValueError as exc:
        raise ParseError(f"ordering contains a non-integer token: {exc}") from None
    if len(values) != n:
        raise ParseError(f"ordering has {len(values)} entries, expected {n}")
    counts = [0] * (n + 1)
    bad = [v for v in values if not (1 <= v <= n)]
    if bad:
        raise ParseError(f"ordering entries out of range 1..{n}: {sorted(set(bad))}")
    for v in values:
        counts[v] += 1
    dupes = [v for v in range(1, n + 1) if counts[v] > 1]
    missing = [v for v in range(1, n + 1) if counts[v] == 0]
    if dupes or missing:
        raise ParseError(f"not a permutation of 1..{n}: duplicate {dupes}, missing {missing}")
    return VertexOrdering(tuple(values))


NO_NEIGHBOR = -1


@dataclass(frozen=True)
class PrefixNeighborTables:
    """Per-vertex extreme neighbor positions in a fixed ordering.

    For vertex x: ``ln[x]`` is the position of its leftmost left neighbor,
    ``lmax[x]`` of its rightmost left neighbor, ``rn[x]`` of its rightmost
    right neighbor; -1 when x has no neighbor on that side.  Arrays are
    indexed by vertex (entry 0 unused).
    """

    ln: tuple[int, ...]
    lmax: tuple[int, ...]
    rn: tuple[int, ...]
    sigma: VertexOrdering

    def left_interval(self, x: int) -> tuple[int, int]:
        """Left(x) = [ln(x), pos(x)] as positions; [pos(x)] when ln(x) = -1."""
        p = self.sigma.pos(x)
        lo = self.ln[x]
        return (p if lo == NO_NEIGHBOR else lo, p)

    def right_interval(self, x: int) -> tuple[int, int]:
        """Right(x) = [pos(x), rn(x)]; singleton when rn(x) = -1."""
        p = self.sigma.pos(x)
        hi = self.rn[x]
        return (p, p if hi == NO_NEIGHBOR else hi)

    def rleft_interval(self, x: int) -> tuple[int, int]:
        """RLeft(x) = [lmax(x), pos(x)]; singleton when lmax(x) = -1."""
        p = self.sigma.pos(x)
        lo = self.lmax[x]
        return (p if lo == NO_NEIGHBOR else lo, p)


def prefix_neighbor_tables(graph: Graph, sigma: VertexOrdering) -> PrefixNeighborTables:
    """Compute ln/lmax/rn for every vertex in one pass over the adjacency lists."""
    n = graph.n
    if sigma.n != n:
        raise ValueError("ordering length does not match vertex count")
    pos = np.asarray(sigma.position, dtype=np.int64)
    if graph.m == 0:
        none = tuple([NO_NEIGHBOR] * (n + 1))
        return PrefixNeighborTables(ln=none, lmax=none, rn=none, sigma=sigma)
    # Flatten adjacency into endpoint arrays; one scatter pass per table.
    counts = np.fromiter((len(graph.adjacency[v]) for v in range(n + 1)), dtype=np.int64, count=n + 1)
    src = np.repeat(np.arange(n + 1, dtype=np.int64), counts)
    dst = np.fromiter(
        (w for v in range(1, n + 1) for w in graph.adjacency[v]), dtype=np.int64, count=int(counts.sum())
    )
    psrc = pos[src]
    pdst = pos[dst]
    left = pdst < psrc
    right = ~left
    ln = np.full(n + 1, np.iinfo(np.int64).max, dtype=np.int64)
    lmax = np.full(n + 1, NO_NEIGHBOR, dtype=np.int64)
    rn = np.full(n + 1, NO_NEIGHBOR, dtype=np.int64)
    np.minimum.at(ln, src[left], pdst[left])
    np.maximum.at(lmax, src[left], pdst[left])
    np.maximum.at(rn, src[right], pdst[right])
    ln[ln == np.iinfo(np.int64).max] = NO_NEIGHBOR
    ln[0] = lmax[0] = rn[0] = NO_NEIGHBOR
    return PrefixNeighborTables(
        ln=tuple(int(x) for x in ln),
        lmax=tuple(int(x) for x in lmax),
        rn=tuple(int(x) for x in rn),
        sigma=sigma,
    )
