"""Reference search engine and the two generic ordering recognizers.

The engine is the correctness oracle for everything else in the package:
eligibility is recomputed from scratch with pairwise comparator calls at
every step, favoring clarity over speed.  The partition-refinement engine
in ``fastengine`` must match its output exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .certificate import Certificate
from .graph import Graph, VertexOrdering
from .orders import LabelOrder, LabelSet, Rel


@dataclass
class EngineState:
    """Mutable per-run state: labels of unnumbered vertices and visit dates.

    At the start of step i, ``labels[v]`` equals the set of visiting dates
    of v's already-visited neighbors, and exactly i-1 vertices carry a date.
    """

    labels: dict[int, LabelSet]
    numbered: dict[int, int]
    step: int


def eligible_set(state: EngineState, order: LabelOrder) -> set[int]:
    """Unnumbered vertices whose label no other unnumbered label dominates."""
    unnumbered = [v for v in state.labels if v not in state.numbered]
    out = set()
    for x in unnumbered:
        lx = state.labels[x]
        if not any(order.compare(lx, state.labels[y]) is Rel.A_LESS_B for y in unnumbered if y != x):
            out.add(x)
    return out


def tbls_run(
    graph: Graph,
    order: LabelOrder,
    tau: VertexOrdering,
    check_invariants: bool = False,
) -> VertexOrdering:
    """Run the search defined by ``order``, breaking ties by ``tau``.

    At each step the tau-leftmost vertex among the maximally-labeled
    unnumbered vertices is visited, and its date is added to the label of
    every unnumbered neighbor (out-neighbor when directed).  The result is
    deterministic and covers disconnected graphs.
    """
    n = graph.n
    if tau.n != n:
        raise ValueError("tie-break permutation length does not match vertex count")
    state = EngineState(labels={v: () for v in graph.vertices()}, numbered={}, step=1)
    out: list[int] = []
    for i in range(1, n + 1):
        state.step = i
        eligible = eligible_set(state, order)
        v = min(eligible, key=tau.pos)
        state.numbered[v] = i
        out.append(v)
        for w in graph.neighbors(v):
            if w not in state.numbered:
                state.labels[w] = state.labels[w] + (i,)
        if check_invariants:
            _assert_label_invariant(graph, state, out)
    return VertexOrdering(tuple(out))


def _assert_label_invariant(graph: Graph, state: EngineState, visited: list[int]) -> None:
    dates = {v: i for i, v in enumerate(visited, start=1)}
    for v in state.labels:
        if v in state.numbered:
            continue
        expect = tuple(sorted(dates[u] for u in visited if graph.adjacent(u, v)))
        assert state.labels[v] == expect, f"label invariant broken at vertex {v}"


def run_with_trace(
    graph: Graph, order: LabelOrder, tau: VertexOrdering
) -> tuple[VertexOrdering, list[dict]]:
    """Like tbls_run, also reporting the eligible set and labels per step."""
    n = graph.n
    state = EngineState(labels={v: () for v in graph.vertices()}, numbered={}, step=1)
    out: list[int] = []
    steps: list[dict] = []
    for i in range(1, n + 1):
        state.step = i
        eligible = eligible_set(state, order)
        v = min(eligible, key=tau.pos)
        steps.append(
            {
                "step": i,
                "eligible": sorted(eligible),
                "chosen": v,
                "labels": {w: state.labels[w] for w in sorted(state.labels) if w not in state.numbered},
            }
        )
        state.numbered[v] = i
        out.append(v)
        for w in graph.neighbors(v):
            if w not in state.numbered:
                state.labels[w] = state.labels[w] + (i,)
    return VertexOrdering(tuple(out)), steps


def left_dates(graph: Graph, sigma: VertexOrdering, u: int, v: int) -> LabelSet:
    """Visiting dates, before v, of the vertices whose visit stamps u.

    For undirected graphs these are simply u's neighbors placed before v in
    sigma.  For directed graphs the label of u accumulates from arcs w -> u,
    so the in-neighbors of u are the relevant set.
    """
    limit = sigma.pos(v)
    if graph.directed:
        return tuple(sorted(sigma.pos(w) for w in graph.in_neighbors(u) if sigma.pos(w) < limit))
    return tuple(sorted(sigma.pos(w) for w in graph.neighbors(u) if sigma.pos(w) < limit))


def check_pairwise(graph: Graph, order: LabelOrder, sigma: VertexOrdering) -> Certificate:
    """Recognize sigma by the pairwise label test.

    sigma is a valid ordering for ``order`` iff for every x before y, the
    label x was visited with is not dominated by y's label at that moment.
    Quadratic; intended as an oracle and for desk-scale inputs.
    """
    n = graph.n
    order_of = sigma.order
    # left_dates(x, x) and left_dates(y, x) for all pairs, built incrementally.
    labels_at: list[list[int]] = [[] for _ in range(n + 1)]
    own_label: dict[int, LabelSet] = {}
    for i in range(1, n + 1):
        x = order_of[i - 1]
        own_label[x] = tuple(labels_at[x])
        for w in graph.neighbors(x):
            labels_at[w].append(i)
    # labels_at[v] now holds all dates of v's stamping neighbors, increasing.
    for i in range(1, n + 1):
        x = order_of[i - 1]
        lx = own_label[x]
        for j in range(i + 1, n + 1):
            y = order_of[j - 1]
            ly = tuple(d for d in labels_at[y] if d < i)
            if order.compare(lx, ly) is Rel.A_LESS_B:
                return Certificate.reject(
                    "pairwise-domination",
                    vertices=[x, y],
                    positions=[i, j],
                    label_x=lx,
                    label_y=ly,
                    order=order.id,
                )
    return Certificate.accept(order=order.id)


def check_fixpoint(graph: Graph, order: LabelOrder, sigma: VertexOrdering) -> Certificate:
    """Recognize sigma by re-running the search with sigma as tie-break.

    sigma can be produced by some tie-break permutation iff running the
    search with sigma itself as the tie-break reproduces sigma.  On reject,
    the witness is the first divergence: the engine preferred a vertex whose
    label strictly dominates that of sigma's vertex at that step.
    """
    n = graph.n
    state = EngineState(labels={v: () for v in graph.vertices()}, numbered={}, step=1)
    for i in range(1, n + 1):
        state.step = i
        eligible = eligible_set(state, order)
        v = min(eligible, key=sigma.pos)
        x = sigma.vertex_at(i)
        if v != x:
            # x is the sigma-least unnumbered vertex, so the divergence means
            # some unnumbered vertex dominates it (often, but not always, the
            # engine's choice itself).
            if order.compare(state.labels[x], state.labels[v]) is Rel.A_LESS_B:
                dominator = v
            else:
                dominator = next(
                    y
                    for y in state.labels
                    if y not in state.numbered
                    and order.compare(state.labels[x], state.labels[y]) is Rel.A_LESS_B
                )
            return Certificate.reject(
                "fixpoint-divergence",
                vertices=[x, v],
                positions=[i, i],
                label_claimed=state.labels[x],
                label_chosen=state.labels[v],
                dominator=dominator,
                label_dominator=state.labels[dominator],
                order=order.id,
            )
        state.numbered[v] = i
        for w in graph.neighbors(v):
            if w not in state.numbered:
                state.labels[w] = state.labels[w] + (i,)
    return Certificate.accept(order=order.id)
