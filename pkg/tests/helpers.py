"""Brute-force oracles and instance builders shared by the test modules.

Everything here is deliberately written from the defining conditions
(triple quantifications, per-vertex scans) rather than reusing the library
algorithms, so agreement between an oracle and the library is evidence.
"""

from __future__ import annotations

import itertools
import random

import numpy as np

from labelsearch import Graph, VertexOrdering


def brute_tables(graph: Graph, sigma: VertexOrdering):
    """Per-vertex scan for ln/lmax/rn positions; -1 when absent."""
    n = graph.n
    ln = [-1] * (n + 1)
    lmax = [-1] * (n + 1)
    rn = [-1] * (n + 1)
    for x in graph.vertices():
        px = sigma.pos(x)
        lefts = [sigma.pos(w) for w in graph.neighbors(x) if sigma.pos(w) < px]
        rights = [sigma.pos(w) for w in graph.neighbors(x) if sigma.pos(w) > px]
        if lefts:
            ln[x] = min(lefts)
            lmax[x] = max(lefts)
        if rights:
            rn[x] = max(rights)
    return ln, lmax, rn


def _triples(sigma: VertexOrdering):
    n = sigma.n
    for pa in range(1, n + 1):
        for pb in range(pa + 1, n + 1):
            for pc in range(pb + 1, n + 1):
                yield sigma.vertex_at(pa), sigma.vertex_at(pb), sigma.vertex_at(pc)


def brute_gen(graph: Graph, sigma: VertexOrdering) -> bool:
    for a, b, c in _triples(sigma):
        if graph.adjacent(a, c) and not graph.adjacent(a, b):
            if not any(sigma.before(d, b) for d in graph.neighbors(b)):
                return False
    return True


def brute_bfs(graph: Graph, sigma: VertexOrdering) -> bool:
    for a, b, c in _triples(sigma):
        if graph.adjacent(a, c) and not graph.adjacent(a, b):
            if not any(sigma.before(d, a) for d in graph.neighbors(b)):
                return False
    return True


def brute_dfs(graph: Graph, sigma: VertexOrdering) -> bool:
    for a, b, c in _triples(sigma):
        if graph.adjacent(a, c) and not graph.adjacent(a, b):
            if not any(sigma.before(a, d) and sigma.before(d, b) for d in graph.neighbors(b)):
                return False
    return True


def brute_lbfs(graph: Graph, sigma: VertexOrdering) -> bool:
    for a, b, c in _triples(sigma):
        if graph.adjacent(a, c) and not graph.adjacent(a, b):
            if not any(
                sigma.before(d, a) and graph.adjacent(d, b) and not graph.adjacent(d, c)
                for d in graph.vertices()
            ):
                return False
    return True


def brute_ldfs(graph: Graph, sigma: VertexOrdering) -> bool:
    for a, b, c in _triples(sigma):
        if graph.adjacent(a, c) and not graph.adjacent(a, b):
            if not any(
                sigma.before(a, d) and sigma.before(d, b)
                and graph.adjacent(d, b) and not graph.adjacent(d, c)
                for d in graph.vertices()
            ):
                return False
    return True


BRUTE_PATTERN = {
    "gen": brute_gen,
    "bfs": brute_bfs,
    "dfs": brute_dfs,
    "lbfs": brute_lbfs,
    "ldfs": brute_ldfs,
}


def brute_unit_interval(graph: Graph, sigma: VertexOrdering) -> bool:
    for x, y, z in _triples(sigma):
        if graph.adjacent(x, z) and not (graph.adjacent(x, y) and graph.adjacent(y, z)):
            return False
    return True


def brute_cocomp(graph: Graph, sigma: VertexOrdering) -> bool:
    for x, y, z in _triples(sigma):
        if graph.adjacent(x, z) and not (graph.adjacent(x, y) or graph.adjacent(y, z)):
            return False
    return True


def exists_cocomp_ordering(graph: Graph) -> bool:
    return any(
        brute_cocomp(graph, VertexOrdering(perm))
        for perm in itertools.permutations(range(1, graph.n + 1))
    )


def random_graph(n: int, m: int, seed: int) -> Graph:
    """Random simple graph with exactly min(m, possible) edges."""
    rng = random.Random(seed)
    possible = n * (n - 1) // 2
    m = min(m, possible)
    edges = set()
    while len(edges) < m:
        u, v = rng.sample(range(1, n + 1), 2)
        edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(n, sorted(edges))


def random_graph_np(n: int, m: int, seed: int) -> Graph:
    """Fast random graph builder for the large performance instances."""
    rng = np.random.default_rng(seed)
    cand = rng.integers(1, n + 1, size=(int(m * 1.7) + 32, 2), dtype=np.int64)
    cand = cand[cand[:, 0] != cand[:, 1]]
    cand = np.unique(np.sort(cand, axis=1), axis=0)
    if len(cand) < m:
        raise ValueError("not enough distinct edges sampled; raise the margin")
    cand = cand[rng.permutation(len(cand))[:m]]
    return Graph.from_edges(n, [(int(u), int(v)) for u, v in cand])


def random_permutation(n: int, rng: random.Random) -> VertexOrdering:
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    return VertexOrdering(tuple(perm))


def claw() -> Graph:
    return Graph.from_edges(4, [(1, 2), (1, 3), (1, 4)])


def graph_with_induced_claw(n: int, seed: int) -> Graph:
    """Random graph guaranteed to contain an induced claw on 4 fixed vertices."""
    rng = random.Random(seed)
    while True:
        g = random_graph(n, rng.randint(n, 3 * n), rng.randint(0, 10**6))
        quad = _find_induced_claw(g)
        if quad:
            return g


def _find_induced_claw(graph: Graph):
    for c in graph.vertices():
        nbrs = list(graph.neighbors(c))
        if len(nbrs) < 3:
            continue
        for trio in itertools.combinations(nbrs, 3):
            a, b, d = trio
            if not graph.adjacent(a, b) and not graph.adjacent(a, d) and not graph.adjacent(b, d):
                return (c, a, b, d)
    return None


find_induced_claw = _find_induced_claw
