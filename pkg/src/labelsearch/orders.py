"""Label sets and the strict partial orders that define each search.

A label is the set of visiting dates of a vertex's already-visited
neighbors, kept as a strictly increasing tuple of positive integers.  A
search is defined entirely by a strict partial order on labels; the seven
built-ins plus the meet composition live here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable

LabelSet = tuple[int, ...]

INFINITE_DATE = math.inf  # larger than every visiting date
ZERO_DATE = 0  # smaller than every visiting date


def label_set(dates: Iterable[int]) -> LabelSet:
    """Normalize an iterable of dates to a strictly increasing tuple."""
    out = tuple(sorted(set(dates)))
    if out and out[0] < 1:
        raise ValueError(f"visiting dates must be positive: {out}")
    return out


def umin(a: LabelSet):
    """Least date of a, or infinity when a is empty."""
    return a[0] if a else INFINITE_DATE


def umax(a: LabelSet):
    """Greatest date of a, or 0 when a is empty."""
    return a[-1] if a else ZERO_DATE


def set_difference(a: LabelSet, b: LabelSet) -> LabelSet:
    """a - b via a linear merge; both inputs are increasing."""
    out = []
    j = 0
    nb = len(b)
    for x in a:
        while j < nb and b[j] < x:
            j += 1
        if j >= nb or b[j] != x:
            out.append(x)
    return tuple(out)


class Rel(Enum):
    """Three-valued comparison: incomparability is a first-class answer."""

    A_LESS_B = "a<b"
    B_LESS_A = "b<a"
    INCOMPARABLE = "incomparable"

    def flipped(self) -> "Rel":
        if self is Rel.A_LESS_B:
            return Rel.B_LESS_A
        if self is Rel.B_LESS_A:
            return Rel.A_LESS_B
        return Rel.INCOMPARABLE


@dataclass(frozen=True)
class LabelOrder:
    """A named strict partial order on label sets.

    ``compare_fn(a, b)`` must be irreflexive, asymmetric and transitive;
    the built-ins are verified exhaustively in the test suite.
    """

    id: str
    compare_fn: Callable[[LabelSet, LabelSet], Rel]

    def compare(self, a: LabelSet, b: LabelSet) -> Rel:
        return self.compare_fn(a, b)

    def less(self, a: LabelSet, b: LabelSet) -> bool:
        return self.compare_fn(a, b) is Rel.A_LESS_B

    def __repr__(self) -> str:
        return f"LabelOrder({self.id})"


def compare(order: LabelOrder, a: LabelSet, b: LabelSet) -> Rel:
    return order.compare(a, b)


def _from_less(less: Callable[[LabelSet, LabelSet], bool]) -> Callable[[LabelSet, LabelSet], Rel]:
    def cmp(a: LabelSet, b: LabelSet) -> Rel:
        if less(a, b):
            return Rel.A_LESS_B
        if less(b, a):
            return Rel.B_LESS_A
        return Rel.INCOMPARABLE

    return cmp


def _gen_less(a: LabelSet, b: LabelSet) -> bool:
    return not a and bool(b)


def _bfs_less(a: LabelSet, b: LabelSet) -> bool:
    return umin(a) > umin(b)


def _dfs_less(a: LabelSet, b: LabelSet) -> bool:
    return umax(a) < umax(b)


def _lbfs_less(a: LabelSet, b: LabelSet) -> bool:
    return umin(set_difference(b, a)) < umin(set_difference(a, b))


def _ldfs_less(a: LabelSet, b: LabelSet) -> bool:
    return umax(set_difference(a, b)) < umax(set_difference(b, a))


def _mcs_less(a: LabelSet, b: LabelSet) -> bool:
    return len(a) < len(b)


def _mns_less(a: LabelSet, b: LabelSet) -> bool:
    return len(a) < len(b) and not set_difference(a, b)


GEN = LabelOrder("gen", _from_less(_gen_less))
BFS = LabelOrder("bfs", _from_less(_bfs_less))
DFS = LabelOrder("dfs", _from_less(_dfs_less))
LBFS = LabelOrder("lbfs", _from_less(_lbfs_less))
LDFS = LabelOrder("ldfs", _from_less(_ldfs_less))
MCS = LabelOrder("mcs", _from_less(_mcs_less))
MNS = LabelOrder("mns", _from_less(_mns_less))

# Empty relation: every pair is incomparable, so any permutation is a valid
# search ordering under it.
NULL = LabelOrder("null", lambda a, b: Rel.INCOMPARABLE)

BUILTIN_ORDERS: dict[str, LabelOrder] = {
    o.id: o for o in (GEN, BFS, DFS, LBFS, LDFS, MCS, MNS)
}

SEVEN_ORDERS: tuple[LabelOrder, ...] = (GEN, BFS, DFS, LBFS, LDFS, MCS, MNS)

# Orders whose live labels admit an exact total key in the fast engine.
TOTAL_BEHAVING_IDS = frozenset({"bfs", "dfs", "lbfs", "ldfs", "mcs"})


def meet(o1: LabelOrder, o2: LabelOrder) -> LabelOrder:
    """Infimum of two orders: a < b only when both components agree."""

    def cmp(a: LabelSet, b: LabelSet) -> Rel:
        r1 = o1.compare(a, b)
        if r1 is Rel.INCOMPARABLE:
            return Rel.INCOMPARABLE
        return r1 if o2.compare(a, b) is r1 else Rel.INCOMPARABLE

    return LabelOrder(f"meet:{o1.id}+{o2.id}", cmp)


VALID_TOKENS = "gen, bfs, dfs, lbfs, ldfs, mcs, mns, meet:X+Y"


def parse_order_token(token: str) -> LabelOrder:
    """Resolve a CLI order token; meet:X+Y composes two base orders."""
    token = token.strip()
    if token in BUILTIN_ORDERS:
        return BUILTIN_ORDERS[token]
    if token.startswith("meet:"):
        body = token[len("meet:"):]
        parts = body.split("+")
        if len(parts) == 2 and all(p in BUILTIN_ORDERS for p in parts):
            return meet(BUILTIN_ORDERS[parts[0]], BUILTIN_ORDERS[parts[1]])
    raise ValueError(f"unknown order token {token!r}; valid tokens: {VALID_TOKENS}")
