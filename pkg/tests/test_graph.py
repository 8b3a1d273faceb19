import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from labelsearch import (
    Graph,
    ParseError,
    VertexOrdering,
    parse_graph,
    parse_ordering,
    prefix_neighbor_tables,
    reverse_ordering,
)

from helpers import brute_tables, random_graph, random_permutation


def test_parse_single_edge():
    g = parse_graph("2 1\n1 2")
    assert g.n == 2 and g.edges() == [(1, 2)] and not g.directed


def test_parse_branching_fixture():
    g = parse_graph("6 5\n4 6\n1 4\n1 2\n1 3\n3 5")
    assert g.n == 6
    assert sorted(g.edges()) == [(1, 2), (1, 3), (1, 4), (3, 5), (4, 6)]


def test_parse_collapses_duplicates():
    g = parse_graph("3 2\n1 2\n1 2")
    assert g.edges() == [(1, 2)]
    assert g.neighbors(3) == ()


def test_parse_directed_flag():
    g = parse_graph("3 2 directed\n1 2\n3 1")
    assert g.directed
    assert g.neighbors(1) == (2,) and g.neighbors(3) == (1,)
    assert g.in_neighbors(1) == (3,)


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("", "line 1"),
        ("2 1\n1 1", "self-loop"),
        ("2 1\n1 3", "out of range"),
        ("2 1\nx y", "non-integer"),
        ("2 2\n1 2", "found 1 edge lines"),
        ("2", "header"),
    ],
)
def test_parse_errors_name_lines(text, fragment):
    with pytest.raises(ParseError, match=fragment.replace("(", "\\(")):
        parse_graph(text)


def test_parse_ordering_identity_and_permuted():
    assert parse_ordering("1 2 3", 3).order == (1, 2, 3)
    sigma = parse_ordering("3 1 2", 3)
    assert sigma.vertex_at(1) == 3 and sigma.pos(3) == 1


def test_parse_ordering_reports_duplicates_and_missing():
    with pytest.raises(ParseError, match=r"duplicate \[1\], missing \[3\]"):
        parse_ordering("1 1 2", 3)


def test_reverse_ordering():
    assert reverse_ordering(VertexOrdering((1, 2, 3))).order == (3, 2, 1)
    assert reverse_ordering(VertexOrdering((2, 3, 1))).order == (1, 3, 2)


@given(st.permutations(list(range(1, 8))))
def test_reverse_is_involution(perm):
    sigma = VertexOrdering(tuple(perm))
    assert reverse_ordering(reverse_ordering(sigma)).order == sigma.order


def test_ordering_rejects_non_permutations():
    with pytest.raises(ValueError):
        VertexOrdering((1, 1, 2))
    with pytest.raises(ValueError):
        VertexOrdering((0, 1))


def test_tables_on_p4_like_graph():
    g = Graph.from_edges(4, [(1, 2), (1, 3), (2, 4)])
    t = prefix_neighbor_tables(g, VertexOrdering.identity(4))
    assert t.ln[3] == 1
    assert t.lmax[4] == 2
    assert t.rn[1] == 3
    assert t.ln[1] == -1


def test_tables_edgeless():
    g = Graph.from_edges(3, [])
    t = prefix_neighbor_tables(g, VertexOrdering((2, 3, 1)))
    assert all(v == -1 for v in t.ln[1:] + t.lmax[1:] + t.rn[1:])


def test_tables_caterpillar_fixture():
    g = parse_graph("6 5\n1 2\n2 4\n4 6\n1 3\n3 5")
    t = prefix_neighbor_tables(g, VertexOrdering.identity(6))
    assert t.ln[5] == 3
    assert t.ln[6] == 4


def test_intervals_use_singletons_for_missing_sides():
    g = Graph.from_edges(3, [(1, 2)])
    sigma = VertexOrdering.identity(3)
    t = prefix_neighbor_tables(g, sigma)
    assert t.left_interval(1) == (1, 1)
    assert t.right_interval(1) == (1, 2)
    assert t.rleft_interval(2) == (1, 2)
    assert t.right_interval(3) == (3, 3)


def test_left_neighbor_presence_is_consistent():
    rng = random.Random(5)
    for trial in range(30):
        g = random_graph(rng.randint(1, 7), rng.randint(0, 15), trial)
        sigma = random_permutation(g.n, rng)
        t = prefix_neighbor_tables(g, sigma)
        for x in g.vertices():
            assert (t.ln[x] == -1) == (t.lmax[x] == -1)
            has_left = any(sigma.before(w, x) for w in g.neighbors(x))
            assert has_left == (t.ln[x] != -1)
            if t.ln[x] != -1:
                assert t.ln[x] <= t.lmax[x] < sigma.pos(x)
            if t.rn[x] != -1:
                assert sigma.pos(x) < t.rn[x]


def test_tables_match_brute_force_on_all_small_graphs(corpus5):
    for g in corpus5:
        for perm in itertools.permutations(range(1, g.n + 1)):
            sigma = VertexOrdering(perm)
            t = prefix_neighbor_tables(g, sigma)
            ln, lmax, rn = brute_tables(g, sigma)
            assert list(t.ln) == ln and list(t.lmax) == lmax and list(t.rn) == rn


def test_graph_is_immutable_value():
    g = Graph.from_edges(3, [(1, 2)])
    with pytest.raises(AttributeError):
        g.n = 5
    assert g.adjacent(1, 2) and not g.adjacent(1, 3)


def test_round_trip_serialization():
    g = Graph.from_edges(5, [(1, 2), (3, 5), (2, 4)])
    assert parse_graph(g.to_text()).edges() == g.edges()
    gd = Graph.from_edges(3, [(1, 2)], directed=True)
    assert parse_graph(gd.to_text()).directed
