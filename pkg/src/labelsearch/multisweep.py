"""Multi-sweep driver, ordering validators, and recognition pipelines.

Each sweep re-runs the search with the reverse of the previous sweep's
output as tie-break, which makes ties fall on the vertex seen latest
before.  Three lexicographic sweeps recognize unit interval graphs; n
sweeps recognize cocomparability graphs.  Instance generators use numpy's
default PCG64 bit generator so corpora are reproducible from a 64-bit seed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .certificate import Certificate
from .engine import tbls_run
from .fastengine import TotalityViolation, tbls_fast
from .graph import Graph, VertexOrdering, prefix_neighbor_tables, reverse_ordering
from .orders import LBFS, TOTAL_BEHAVING_IDS, LabelOrder


@dataclass(frozen=True)
class SweepTrace:
    """Orderings sigma_0..sigma_k of an iterated search."""

    orderings: tuple[VertexOrdering, ...]
    order_id: str

    @property
    def seed(self) -> VertexOrdering:
        return self.orderings[0]

    @property
    def final(self) -> VertexOrdering:
        return self.orderings[-1]


def run_search(graph: Graph, order: LabelOrder, tau: VertexOrdering, engine: str = "auto") -> VertexOrdering:
    """Run one search with the requested engine.

    ``auto`` picks the partition-refinement engine for the five orders it
    supports exactly and the reference engine otherwise; ``fast`` falls back
    to the reference engine if the order turns out not to be total on live
    labels.
    """
    if engine not in ("auto", "ref", "fast"):
        raise ValueError(f"unknown engine {engine!r}")
    if engine == "ref":
        return tbls_run(graph, order, tau)
    if engine == "auto" and order.id not in TOTAL_BEHAVING_IDS:
        return tbls_run(graph, order, tau)
    try:
        return tbls_fast(graph, order, tau)
    except TotalityViolation:
        return tbls_run(graph, order, tau)


def sweep_sequence(
    graph: Graph, order: LabelOrder, sigma0: VertexOrdering, k: int, engine: str = "auto"
) -> SweepTrace:
    """Iterate sigma_i = search(graph, order, reverse(sigma_{i-1})) for k sweeps."""
    if k < 0:
        raise ValueError("sweep count must be nonnegative")
    orderings = [sigma0]
    for _ in range(k):
        orderings.append(run_search(graph, order, reverse_ordering(orderings[-1]), engine))
    return SweepTrace(orderings=tuple(orderings), order_id=order.id)


def is_unit_interval_ordering(graph: Graph, sigma: VertexOrdering) -> Certificate:
    """Does every edge span only mutual neighbors in sigma?

    Accepts iff for all x before y before z with xz an edge, both xy and yz
    are edges; equivalently every neighborhood is a contiguous band around
    its vertex, which is what the linear scan checks.  The reject witness is
    a violating triple.
    """
    if graph.directed:
        raise ValueError("ordering validators support undirected graphs only")
    tables = prefix_neighbor_tables(graph, sigma)
    for x in graph.vertices():
        p = sigma.pos(x)
        lo = tables.ln[x] if tables.ln[x] != -1 else p
        hi = tables.rn[x] if tables.rn[x] != -1 else p
        if len(graph.neighbors(x)) != hi - lo:
            # a hole in the band [lo, hi] around x is a violating middle vertex
            nbr_pos = set()
            for w in graph.neighbors(x):
                nbr_pos.add(sigma.pos(w))
            for q in range(lo, hi + 1):
                if q != p and q not in nbr_pos:
                    y = sigma.vertex_at(q)
                    if q > p:
                        triple = (x, y, sigma.vertex_at(hi))
                    else:
                        triple = (sigma.vertex_at(lo), y, x)
                    return Certificate.reject(
                        "unit-interval-pattern",
                        vertices=list(triple),
                        positions=[sigma.pos(v) for v in triple],
                    )
    return Certificate.accept(property="unit-interval-ordering")


def is_cocomp_ordering(graph: Graph, sigma: VertexOrdering) -> Certificate:
    """Is sigma umbrella-free?

    Accepts iff every edge xz with x before z has, for each y between them,
    at least one of xy, yz as an edge.  Pair scan over edges, O(n*m).
    """
    if graph.directed:
        raise ValueError("ordering validators support undirected graphs only")
    order = sigma.order
    for u, v in graph.edges():
        pu, pv = sigma.pos(u), sigma.pos(v)
        if pu > pv:
            u, v, pu, pv = v, u, pv, pu
        for q in range(pu + 1, pv):
            y = order[q - 1]
            if not (graph.adjacent(u, y) or graph.adjacent(y, v)):
                return Certificate.reject(
                    "cocomp-pattern",
                    vertices=[u, y, v],
                    positions=[pu, q, pv],
                )
    return Certificate.accept(property="cocomp-ordering")


@dataclass(frozen=True)
class PipelineResult:
    certificate: Certificate
    ordering: VertexOrdering
    trace: SweepTrace

    @property
    def accepted(self) -> bool:
        return self.certificate.accepted


def recognize_unit_interval(graph: Graph, engine: str = "auto") -> PipelineResult:
    """Three lexicographic sweeps from the identity, then validate sigma_3.

    For a unit interval graph the third sweep is guaranteed to produce a
    unit interval ordering, so the validator's verdict decides membership.
    """
    trace = sweep_sequence(graph, LBFS, VertexOrdering.identity(graph.n), 3, engine)
    cert = is_unit_interval_ordering(graph, trace.final)
    return PipelineResult(certificate=cert, ordering=trace.final, trace=trace)


def cocomp_pipeline(graph: Graph, engine: str = "auto") -> PipelineResult:
    """n lexicographic sweeps from the identity, then the umbrella-free check."""
    trace = sweep_sequence(graph, LBFS, VertexOrdering.identity(graph.n), graph.n, engine)
    cert = is_cocomp_ordering(graph, trace.final)
    return PipelineResult(certificate=cert, ordering=trace.final, trace=trace)


def gen_unit_interval_graph(n: int, seed: int) -> Graph:
    """Random unit interval graph: n unit intervals with left ends in [0, n/2].

    Vertices are adjacent iff their intervals intersect.  Driven by
    numpy.random.default_rng (PCG64), so a seed pins the instance exactly.
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    rng = np.random.default_rng(seed)
    left = rng.uniform(0.0, n / 2.0, size=n)
    edges = [
        (i + 1, j + 1)
        for i in range(n)
        for j in range(i + 1, n)
        if abs(left[i] - left[j]) <= 1.0
    ]
    return Graph.from_edges(n, edges)


def gen_permutation_graph(n: int, seed: int) -> Graph:
    """Random permutation graph: i < j adjacent iff the permutation inverts them."""
    if n < 1:
        raise ValueError("need at least one vertex")
    rng = np.random.default_rng(seed)
    pi = rng.permutation(n)
    edges = [(i + 1, j + 1) for i in range(n) for j in range(i + 1, n) if pi[i] > pi[j]]
    return Graph.from_edges(n, edges)
