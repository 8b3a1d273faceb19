"""Partition-refinement search engine for total label orders.

Maintains an ordered partition of the unnumbered vertices in which every
part shares one label and stays sorted by the tie-break permutation.  For
most orders the maximally-labeled part is found through a min-heap whose
keys never change after insertion; entries of emptied parts and entries
whose recorded head vertex has since left the part are discarded or
corrected lazily on pop.  For lbfs the in-place splitting discipline keeps
the whole part sequence sorted by decreasing label, so the eligible part is
simply the first of the sequence and no heap is involved.

Output is bit-for-bit identical to the reference engine for any order that
is total on the labels that are live together.  The five built-ins bfs,
dfs, lbfs, ldfs and mcs get exact structural keys (umin, umax, cardinality,
or the full date tuple for the lexicographic orders); for the three scalar
keys, genuinely incomparable key ties are resolved by the tau-position of
each part's first vertex, so these orders never fail.  Any other order is
compared through its own comparator and raises TotalityViolation on the
first incomparable pair of part labels it encounters (the pair's live
windows may merely overlap, as superseded heap entries keep their labels
until popped).
"""

from __future__ import annotations

import math
from heapq import heappop, heappush

import numpy as np

from .graph import Graph, VertexOrdering
from .orders import LabelOrder, LabelSet, Rel


class TotalityViolation(RuntimeError):
    """Two live part labels are incomparable; the order cannot drive the heap."""

    def __init__(self, label_a: LabelSet, label_b: LabelSet, order_id: str = ""):
        self.label_a = label_a
        self.label_b = label_b
        self.order_id = order_id
        super().__init__(
            f"labels {set(label_a) or '{}'} and {set(label_b) or '{}'} are incomparable"
            + (f" under {order_id}" if order_id else "")
        )


class OrderedPartition:
    """Ordered partition of unnumbered vertices with per-part shared labels.

    Vertices move between parts but a part's label is fixed at creation;
    splitting a part puts the pivot-hit fragment directly before the
    remainder, and both fragments keep their tau order.  Member lists are
    cleaned lazily through a head cursor: a vertex that left a part is
    skipped the first time the cursor reaches it.

    The engine opts out of the bookkeeping it does not read:
    ``track_sequence=False`` skips the part sequence links and
    ``track_labels=False`` skips materializing label tuples.
    """

    def __init__(self, vertices_in_tau_order, tau_pos, track_sequence: bool = True,
                 track_labels: bool = True):
        self._tau_pos = tau_pos
        self._part_of: list[int] = [-1] * len(tau_pos)
        self._members: list[list[int]] = [list(vertices_in_tau_order)]
        self._heads: list[int] = [0]
        self._labels: list[LabelSet] | None = [()] if track_labels else None
        self._sizes: list[int] = [len(self._members[0])]
        for v in vertices_in_tau_order:
            self._part_of[v] = 0
        self._track = track_sequence
        # per-part scratch for refine: which refine round last split the part
        self._twin_of: list[int] = [0]
        self._twin_stamp: list[int] = [0]
        self._stamp = 0
        # sequence links; -1 terminates both ends
        self._prev: list[int] = [-1]
        self._next: list[int] = [-1]
        self._first: int = 0 if self._sizes[0] else -1

    # -- inspection ---------------------------------------------------------

    @property
    def parts(self) -> list[tuple[tuple[int, ...], LabelSet]]:
        """Live parts in sequence order as (members, label) pairs."""
        if not self._track or self._labels is None:
            raise ValueError("partition was built without sequence/label tracking")
        out = []
        pid = self._first
        while pid != -1:
            members = tuple(w for w in self._members[pid] if self._part_of[w] == pid)
            if members:
                out.append((members, self._labels[pid]))
            pid = self._next[pid]
        return out

    def part_of(self, v: int) -> int:
        """Handle of v's part, or -1 once v has been removed."""
        return self._part_of[v]

    def label_of(self, pid: int) -> LabelSet:
        if self._labels is None:
            raise ValueError("partition was built with track_labels=False")
        return self._labels[pid]

    def size_of(self, pid: int) -> int:
        return self._sizes[pid]

    @property
    def unnumbered(self) -> int:
        return sum(1 for p in self._part_of if p >= 0)

    # -- mutation -----------------------------------------------------------

    def head(self, pid: int) -> int:
        """First vertex of a nonempty part in tau order."""
        ms = self._members[pid]
        part_of = self._part_of
        i = self._heads[pid]
        while part_of[ms[i]] != pid:
            i += 1
        self._heads[pid] = i
        return ms[i]

    def remove(self, v: int) -> int:
        """Remove a vertex (it got numbered); returns its former part handle."""
        pid = self._part_of[v]
        self._part_of[v] = -1
        self._sizes[pid] -= 1
        if self._sizes[pid] == 0 and self._track:
            self._unlink(pid)
        return pid

    def refine(self, pivot, date: int, presorted: bool = False) -> list[tuple[int, int]]:
        """Split every part Q into Q∩pivot (label + date) before Q−pivot.

        Removed/numbered vertices in the pivot are ignored.  Returns the
        (old part, new part) pairs actually split, in part-creation order;
        cost is proportional to the pivot size.
        """
        if not presorted:
            pivot = sorted(pivot, key=self._tau_pos.__getitem__)
        part_of = self._part_of
        members = self._members
        sizes = self._sizes
        labels = self._labels
        heads = self._heads
        twin_of = self._twin_of
        twin_stamp = self._twin_stamp
        track = self._track
        prev, nxt = self._prev, self._next
        self._stamp += 1
        stamp = self._stamp
        changes: list[tuple[int, int]] = []
        for w in pivot:
            pid = part_of[w]
            if pid < 0:
                continue
            if twin_stamp[pid] == stamp:
                npid = twin_of[pid]
            else:
                npid = len(members)
                members.append([])
                sizes.append(0)
                heads.append(0)
                twin_of.append(0)
                twin_stamp.append(0)
                if labels is not None:
                    labels.append(labels[pid] + (date,))
                if track:  # link npid directly before pid
                    p = prev[pid]
                    prev.append(p)
                    nxt.append(pid)
                    prev[pid] = npid
                    if p == -1:
                        self._first = npid
                    else:
                        nxt[p] = npid
                else:
                    prev.append(-1)
                    nxt.append(-1)
                twin_of[pid] = npid
                twin_stamp[pid] = stamp
                changes.append((pid, npid))
            part_of[w] = npid
            members[npid].append(w)
            sizes[npid] += 1
            sizes[pid] -= 1
        if track:
            for pid, _ in changes:
                if sizes[pid] == 0:
                    self._unlink(pid)
        return changes

    def _unlink(self, pid: int) -> None:
        prv, nxt = self._prev[pid], self._next[pid]
        if prv == -1:
            self._first = nxt
        else:
            self._next[prv] = nxt
        if nxt != -1:
            self._prev[nxt] = prv


def refine(partition: OrderedPartition, pivot, date: int) -> OrderedPartition:
    """Refine in place and return the partition (module-level convenience)."""
    partition.refine(pivot, date)
    return partition


# -- heap keys ---------------------------------------------------------------

_INF = math.inf


def _key_bfs(label: LabelSet):
    return label[0] if label else _INF


def _key_dfs(label: LabelSet):
    return -label[-1] if label else 0


def _key_mcs(label: LabelSet):
    return -len(label)


def _key_lbfs(label: LabelSet):
    # ascending dates; the terminator makes a proper prefix (a superset from
    # the order's viewpoint) win its extension comparisons
    return label + (_INF,)


def _key_ldfs(label: LabelSet):
    return tuple(-d for d in reversed(label)) + (_INF,)


# child key from parent key when a part is split at a given date
_SCALAR_CHILD = {
    "bfs": lambda pk, date: date if pk > date else pk,  # umin; inf compares greater
    "dfs": lambda pk, date: -date,  # umax is always the new date
    "mcs": lambda pk, date: pk - 1,  # negated cardinality
}


class _ComparatorKey:
    """Heap key for arbitrary orders; immutable label, compares via the order."""

    __slots__ = ("label", "order")

    def __init__(self, label: LabelSet, order: LabelOrder):
        self.label = label
        self.order = order

    def __eq__(self, other):
        return self.label == other.label

    def __lt__(self, other):
        rel = self.order.compare(self.label, other.label)
        if rel is Rel.B_LESS_A:
            return True  # self dominates, pops first
        if rel is Rel.A_LESS_B:
            return False
        if self.label == other.label:
            return False
        raise TotalityViolation(self.label, other.label, self.order.id)


def _sorted_neighbor_slices(graph: Graph, tau_pos) -> tuple[np.ndarray, np.ndarray]:
    """Flat neighbor array grouped by vertex, each group sorted by tau position.

    Neighbors of v occupy flat[offsets[v]:offsets[v + 1]].
    """
    n = graph.n
    counts = np.fromiter((len(a) for a in graph.adjacency), dtype=np.int64, count=n + 1)
    offsets = np.zeros(n + 2, dtype=np.int64)
    np.cumsum(counts, out=offsets[1:])
    total = int(offsets[-1])
    flat = np.fromiter(
        (w for v in graph.vertices() for w in graph.adjacency[v]), dtype=np.int64, count=total
    )
    if total:
        src = np.repeat(np.arange(n + 1, dtype=np.int64), counts)
        pos_arr = np.asarray(tau_pos, dtype=np.int64)
        flat = flat[np.lexsort((pos_arr[flat], src))]
    return flat, offsets


def tbls_fast(graph: Graph, order: LabelOrder, tau: VertexOrdering) -> VertexOrdering:
    """Partition-refinement run; exact match of the reference engine.

    Raises TotalityViolation when the order cannot rank two live part
    labels (never for bfs/dfs/lbfs/ldfs/mcs).
    """
    n = graph.n
    if tau.n != n:
        raise ValueError("tie-break permutation length does not match vertex count")
    tau_pos = list(tau.position)
    flat, offsets = _sorted_neighbor_slices(graph, tau_pos)
    oid = order.id
    generic = oid not in ("bfs", "dfs", "mcs", "lbfs", "ldfs")
    partition = OrderedPartition(
        list(tau.order), tau_pos, track_sequence=oid == "lbfs", track_labels=generic
    )
    sizes = partition._sizes
    part_head = partition.head
    part_remove = partition.remove
    part_refine = partition.refine
    out: list[int] = []
    offs = offsets.tolist()

    if oid == "lbfs":
        # In-place splitting keeps the sequence sorted by decreasing label:
        # a hit fragment L+{i} goes right before its remainder L, and for
        # parts L1 above L2 their first label difference is a date below i,
        # so L1 stays above both fragments of L2.  The eligible part is
        # therefore always the first of the sequence.
        for date in range(1, n + 1):
            x = part_head(partition._first)
            out.append(x)
            part_remove(x)
            part_refine(flat[offs[x]:offs[x + 1]].tolist(), date, presorted=True)
        return VertexOrdering(tuple(out))

    if oid in _SCALAR_CHILD:
        # entries (key, head tau-position, pid); a stale head position is
        # always smaller than the true one, so correcting on pop converges
        child = _SCALAR_CHILD[oid]
        keys: list = [_INF if oid == "bfs" else 0]
        heap: list = [(keys[0], tau_pos[part_head(0)], 0)]
        for date in range(1, n + 1):
            while True:
                key, hpos, pid = heappop(heap)
                if sizes[pid] > 0:
                    x = part_head(pid)
                    cur = tau_pos[x]
                    if cur == hpos:
                        break
                    heappush(heap, (key, cur, pid))
            out.append(x)
            part_remove(x)
            if sizes[pid] > 0:
                heappush(heap, (key, tau_pos[part_head(pid)], pid))
            for old_pid, new_pid in part_refine(flat[offs[x]:offs[x + 1]].tolist(), date, presorted=True):
                nkey = child(keys[old_pid], date)
                keys.append(nkey)
                heappush(heap, (nkey, tau_pos[part_head(new_pid)], new_pid))
        return VertexOrdering(tuple(out))

    # ldfs and comparator keys are injective over live labels: no ties, no
    # head bookkeeping; entries are (key, pid)
    if oid == "ldfs":
        keys = [(_INF,)]

        def child_key(old_pid, new_pid, date):
            return (-date,) + keys[old_pid]

    else:
        labels = partition._labels

        def child_key(old_pid, new_pid, date, _order=order):
            return _ComparatorKey(labels[new_pid], _order)

        keys = [_ComparatorKey((), order)]
    heap = [(keys[0], 0)]
    for date in range(1, n + 1):
        while True:
            key, pid = heappop(heap)
            if sizes[pid] > 0:
                break
        x = part_head(pid)
        out.append(x)
        part_remove(x)
        if sizes[pid] > 0:
            heappush(heap, (key, pid))
        for old_pid, new_pid in part_refine(flat[offs[x]:offs[x + 1]].tolist(), date, presorted=True):
            nkey = child_key(old_pid, new_pid, date)
            keys.append(nkey)
            heappush(heap, (nkey, new_pid))
    return VertexOrdering(tuple(out))
