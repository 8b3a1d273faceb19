"""Executable checks of the extension hierarchy between searches.

A search S' extends S when every S'-ordering is also an S-ordering, which
happens exactly when the label order of S' extends that of S.  The label
side is decidable by exhaustive enumeration over a small date universe; the
ordering side is spot-checked by running searches and certifying their
output.  The witness-graph constructor turns any non-dominated label pair
into a concrete graph exhibiting it, which is also how non-extensions are
separated at the ordering level.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .engine import left_dates, tbls_run
from .graph import Graph, VertexOrdering
from .orders import SEVEN_ORDERS, LabelOrder, LabelSet, Rel


def subsets_of(u: int) -> list[LabelSet]:
    """All subsets of {1..u} in binary-counting order (bit i <-> date i+1)."""
    out = []
    for mask in range(1 << u):
        out.append(tuple(d for d in range(1, u + 1) if mask & (1 << (d - 1))))
    return out


def check_label_extension(
    s: LabelOrder, s_prime: LabelOrder, u: int
) -> tuple[LabelSet, LabelSet] | None:
    """Does the order of s_prime extend the order of s on subsets of {1..u}?

    Returns None when every dominated pair stays dominated, else the first
    witness (A, B) in enumeration order with A below B under s but not
    under s_prime.
    """
    if u > 10:
        raise ValueError("exhaustive check is capped at a 10-date universe")
    subs = subsets_of(u)
    for a in subs:
        for b in subs:
            if s.compare(a, b) is Rel.A_LESS_B and s_prime.compare(a, b) is not Rel.A_LESS_B:
                return (a, b)
    return None


def witness_graph(
    s: LabelOrder, a: LabelSet, b: LabelSet, p: int
) -> tuple[Graph, VertexOrdering]:
    """Graph and valid ordering of s whose step p-1 labels are exactly a and b.

    Vertices are 1..p visited in identity order; the vertex visited at p-1
    is wired to the dates in a, the last vertex to the dates in b, and the
    earlier vertices copy whichever of the two restricted label sets is not
    dominated, so that the identity ordering survives the pairwise test.
    Requires a and b inside {1..p-2} and a not strictly below b.
    """
    if p < 2:
        raise ValueError("need at least two vertices")
    universe = set(range(1, p - 1))
    if not (set(a) <= universe and set(b) <= universe):
        raise ValueError(f"label sets must be subsets of 1..{p - 2}")
    if s.compare(a, b) is Rel.A_LESS_B:
        raise ValueError("construction requires that a is not dominated by b")
    a_set, b_set = set(a), set(b)
    edges: list[tuple[int, int]] = []
    for i in range(2, p - 1):
        ai = tuple(d for d in a if d < i)
        bi = tuple(d for d in b if d < i)
        source = b_set if s.compare(ai, bi) is Rel.A_LESS_B else a_set
        edges.extend((i, k) for k in range(1, i) if k in source)
    edges.extend((p - 1, k) for k in a)
    edges.extend((p, k) for k in b)
    return Graph.from_edges(p, edges), VertexOrdering.identity(p)


# -- hierarchy report ---------------------------------------------------------


@dataclass
class HierarchyReport:
    """Label-level extension structure plus the ordering-level spot check."""

    arcs: set[tuple[str, str]] = field(default_factory=set)
    transitive_extensions: set[tuple[str, str]] = field(default_factory=set)
    non_arcs: dict[tuple[str, str], tuple[LabelSet, LabelSet]] = field(default_factory=dict)
    ordering_failures: list[dict] = field(default_factory=list)
    universe: int = 0

    @property
    def ordering_spot_ok(self) -> bool:
        return not self.ordering_failures

    def to_json_dict(self) -> dict:
        return {
            "universe": self.universe,
            "arcs": sorted(list(p) for p in self.arcs),
            "transitive_extensions": sorted(list(p) for p in self.transitive_extensions),
            "non_arcs": [
                {"pair": list(pair), "witness_a": list(w[0]), "witness_b": list(w[1])}
                for pair, w in sorted(self.non_arcs.items())
            ],
            "ordering_spot_ok": self.ordering_spot_ok,
            "ordering_failures": self.ordering_failures,
        }


def _recognizer_certificate(graph: Graph, order: LabelOrder, sigma: VertexOrdering):
    from .certify import recognize

    return recognize(graph, order, sigma)[0]


def verify_hierarchy(
    u: int,
    graph_corpus: list[Graph] | None = None,
    taus_per_graph: int = 3,
    seed: int = 2024,
) -> HierarchyReport:
    """Recompute the extension hierarchy of the seven searches.

    Label level: exhaustive pair check over subsets of {1..u} for every
    ordered pair of orders; arcs are the transitive reduction of the
    extension relation, every non-extension keeps its witness pair.
    Ordering level: for each arc S -> S', random-tie-break runs of S' over
    the corpus must be accepted by the recognizer of S.
    """
    if u > 6:
        raise ValueError("hierarchy verification is capped at a 6-date universe")
    report = HierarchyReport(universe=u)
    ids = [o.id for o in SEVEN_ORDERS]
    by_id = {o.id: o for o in SEVEN_ORDERS}
    closure: set[tuple[str, str]] = set()
    for s in SEVEN_ORDERS:
        for sp in SEVEN_ORDERS:
            if s.id == sp.id:
                continue
            witness = check_label_extension(s, sp, u)
            if witness is None:
                closure.add((s.id, sp.id))
            else:
                report.non_arcs[(s.id, sp.id)] = witness
    for pair in closure:
        s, sp = pair
        redundant = any(
            (s, t) in closure and (t, sp) in closure for t in ids if t not in pair
        )
        (report.transitive_extensions if redundant else report.arcs).add(pair)

    if graph_corpus is None:
        graph_corpus = all_connected_graphs(4)
    rng = np.random.default_rng(seed)
    for s_id, sp_id in sorted(report.arcs):
        for graph in graph_corpus:
            for _ in range(taus_per_graph):
                tau = VertexOrdering(tuple(int(v) for v in rng.permutation(graph.n) + 1))
                sigma = tbls_run(graph, by_id[sp_id], tau)
                cert = _recognizer_certificate(graph, by_id[s_id], sigma)
                if not cert.accepted:
                    report.ordering_failures.append(
                        {
                            "arc": [s_id, sp_id],
                            "n": graph.n,
                            "edges": graph.edges(),
                            "sigma": list(sigma.order),
                            "rule": cert.rule,
                        }
                    )
    return report


# -- small-graph corpus -------------------------------------------------------


def _is_connected_mask(n: int, mask: int, pairs: list[tuple[int, int]]) -> bool:
    adj = [[] for _ in range(n)]
    for idx, (i, j) in enumerate(pairs):
        if mask & (1 << idx):
            adj[i].append(j)
            adj[j].append(i)
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == n


def all_connected_graphs(max_n: int) -> list[Graph]:
    """Every connected graph with 1..max_n vertices, one per isomorphism class."""
    from itertools import permutations

    if max_n > 6:
        raise ValueError("exhaustive corpus is capped at n = 6")
    out: list[Graph] = []
    for n in range(1, max_n + 1):
        pairs = list(combinations(range(n), 2))
        index = {pq: i for i, pq in enumerate(pairs)}
        perms = list(permutations(range(n)))
        seen: set[int] = set()
        for mask in range(1 << len(pairs)):
            if not _is_connected_mask(n, mask, pairs):
                continue
            canon = mask
            for perm in perms:
                remapped = 0
                for idx, (i, j) in enumerate(pairs):
                    if mask & (1 << idx):
                        pi, pj = perm[i], perm[j]
                        remapped |= 1 << index[(min(pi, pj), max(pi, pj))]
                if remapped < canon:
                    canon = remapped
            if canon in seen:
                continue
            seen.add(canon)
            edges = [(i + 1, j + 1) for idx, (i, j) in enumerate(pairs) if mask & (1 << idx)]
            out.append(Graph.from_edges(n, edges))
    return out


def random_connected_graph(n: int, seed: int, extra_edges: int | None = None) -> Graph:
    """Random spanning tree plus extra random edges; connected by construction."""
    rng = np.random.default_rng(seed)
    edges = set()
    order = [int(v) + 1 for v in rng.permutation(n)]
    for i in range(1, n):
        j = int(rng.integers(0, i))
        u, v = order[i], order[j]
        edges.add((min(u, v), max(u, v)))
    if extra_edges is None:
        extra_edges = int(rng.integers(0, n + 1))
    for _ in range(extra_edges):
        u = int(rng.integers(1, n + 1))
        v = int(rng.integers(1, n + 1))
        if u != v:
            edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(n, sorted(edges))


# -- layered-search fixtures --------------------------------------------------


def branching_fixture_graph() -> Graph:
    """Six vertices, one center: both depth-2 leaves hang off distinct branches."""
    return Graph.from_edges(6, [(4, 6), (1, 4), (1, 2), (1, 3), (3, 5)])


def caterpillar_fixture_graph() -> Graph:
    """Six vertices: one depth-2 leaf and one depth-3 leaf on distinct branches."""
    return Graph.from_edges(6, [(1, 2), (2, 4), (4, 6), (1, 3), (3, 5)])


def bfs_layers(graph: Graph, start: int) -> dict[int, int]:
    dist = {start: 0}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in graph.neighbors(v):
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def is_layered_ordering(graph: Graph, sigma: VertexOrdering) -> bool:
    """Distances from each component's first visited vertex never decrease."""
    dist: dict[int, int] = {}
    comp_of: dict[int, int] = {}
    for v in sigma:
        if v not in comp_of:
            for w, d in bfs_layers(graph, v).items():
                comp_of[w] = v
                dist[w] = d
    last_depth: dict[int, int] = {}
    for v in sigma:
        root = comp_of[v]
        if dist[v] < last_depth.get(root, -1):
            return False
        last_depth[root] = dist[v]
    return True


@dataclass(frozen=True)
class LayeredFixtureReport:
    """Why no single label order reproduces every layered search ordering."""

    branching_both_completions_valid: bool
    caterpillar_v5_first_valid: bool
    caterpillar_v6_first_valid: bool
    label_first_leaf: LabelSet
    label_second_leaf: LabelSet
    no_single_order_suffices: bool


def layered_fixture_check() -> LayeredFixtureReport:
    """Reproduce the two fixture facts that pin labels {3} and {4} both ways.

    On the branching fixture the prefix 1,2,3,4 leaves vertices 5 and 6 in
    the same layer, so both completions are valid and the labels {3}, {4}
    must be incomparable.  On the caterpillar the same prefix forces vertex
    5 (layer 2) before vertex 6 (layer 3) although the labels are again {3}
    and {4}, so the pair must be strictly ordered.  No single strict partial
    order satisfies both.
    """
    g = branching_fixture_graph()
    h = caterpillar_fixture_graph()
    sig = lambda order: VertexOrdering(tuple(order))
    g_56 = is_layered_ordering(g, sig((1, 2, 3, 4, 5, 6)))
    g_65 = is_layered_ordering(g, sig((1, 2, 3, 4, 6, 5)))
    h_56 = is_layered_ordering(h, sig((1, 2, 3, 4, 5, 6)))
    h_65 = is_layered_ordering(h, sig((1, 2, 3, 4, 6, 5)))
    prefix = sig((1, 2, 3, 4, 5, 6))
    label_5 = left_dates(g, prefix, 5, 5)
    label_6 = left_dates(g, prefix, 6, 6)
    label_5_h = left_dates(h, prefix, 5, 5)
    label_6_h = left_dates(h, prefix, 6, 6)
    consistent_labels = label_5 == label_5_h and label_6 == label_6_h
    return LayeredFixtureReport(
        branching_both_completions_valid=g_56 and g_65,
        caterpillar_v5_first_valid=h_56,
        caterpillar_v6_first_valid=h_65,
        label_first_leaf=label_5,
        label_second_leaf=label_6,
        no_single_order_suffices=(g_56 and g_65 and h_56 and not h_65 and consistent_labels),
    )
