import itertools
import random

import pytest

from labelsearch import (
    Graph,
    VertexOrdering,
    check_bfs,
    check_dfs,
    check_fixpoint,
    check_generic,
    check_lbfs,
    check_ldfs,
    check_ordering,
    parse_graph,
    prefix_neighbor_tables,
    recognize,
    replay_witness,
    tbls_run,
)
from labelsearch.orders import BUILTIN_ORDERS

from helpers import BRUTE_PATTERN, random_graph, random_permutation

BRANCHING = parse_graph("6 5\n4 6\n1 4\n1 2\n1 3\n3 5")
P4_LIKE = Graph.from_edges(4, [(1, 2), (1, 3), (2, 4)])
PATTERN_IDS = ["gen", "bfs", "dfs", "lbfs", "ldfs"]


def test_generic_accepts_component_respecting_order():
    sigma = VertexOrdering((1, 2, 3, 4, 6, 5))
    assert check_generic(BRANCHING, sigma).accepted


def test_generic_rejects_with_witness():
    sigma = VertexOrdering((2, 5, 1, 3, 4, 6))
    cert = check_generic(BRANCHING, sigma)
    assert not cert.accepted
    assert cert.witness["positions"][2] == 3
    assert cert.witness["vertices"] == [2, 5, 1]
    assert replay_witness(BRANCHING, sigma, cert)


def test_generic_accepts_edgeless_any_order():
    g = Graph.from_edges(4, [])
    for perm in itertools.permutations(range(1, 5)):
        assert check_generic(g, VertexOrdering(perm)).accepted


def test_bfs_accepts_identity_on_p4_like():
    assert check_bfs(P4_LIKE, VertexOrdering.identity(4)).accepted


def test_bfs_rejects_with_witness():
    sigma = VertexOrdering((1, 2, 4, 3))
    cert = check_bfs(P4_LIKE, sigma)
    assert not cert.accepted
    assert cert.witness["vertices"] == [1, 4, 3]
    assert replay_witness(P4_LIKE, sigma, cert)


def test_bfs_accepts_star_center_first():
    star = Graph.from_edges(4, [(1, 2), (1, 3), (1, 4)])
    for leaves in itertools.permutations((2, 3, 4)):
        assert check_bfs(star, VertexOrdering((1,) + leaves)).accepted


def test_bfs_inherits_generic_reject():
    sigma = VertexOrdering((2, 5, 1, 3, 4, 6))
    cert = check_bfs(BRANCHING, sigma)
    assert not cert.accepted
    assert cert.rule == "generic-pattern"


def test_dfs_accepts_and_rejects_on_p4_like():
    assert check_dfs(P4_LIKE, VertexOrdering((1, 2, 4, 3))).accepted
    cert = check_dfs(P4_LIKE, VertexOrdering.identity(4))
    assert not cert.accepted
    assert cert.witness["vertices"] == [2, 3, 4]
    assert replay_witness(P4_LIKE, VertexOrdering.identity(4), cert)


def test_dfs_accepts_single_edge():
    g = Graph.from_edges(2, [(1, 2)])
    assert check_dfs(g, VertexOrdering((1, 2))).accepted


def test_dfs_does_not_flag_the_benign_crossing():
    # Right(1) = [1,4] and RLeft(5) = [3,5] cross as plain intervals, yet the
    # ordering is a genuine depth-first ordering.
    g = Graph.from_edges(5, [(1, 2), (1, 4), (2, 3), (3, 4), (3, 5)])
    sigma = VertexOrdering.identity(5)
    assert check_fixpoint(g, BUILTIN_ORDERS["dfs"], sigma).accepted
    assert check_dfs(g, sigma).accepted


def test_lbfs_accepts_and_rejects_claw_with_tail():
    assert check_lbfs(P4_LIKE, VertexOrdering.identity(4)).accepted
    sigma = VertexOrdering((1, 2, 4, 3))
    cert = check_lbfs(P4_LIKE, sigma)
    assert not cert.accepted
    assert cert.witness["vertices"] == [1, 4, 3]
    assert replay_witness(P4_LIKE, sigma, cert)


def test_lbfs_accepts_complete_graph():
    k4 = Graph.from_edges(4, [(i, j) for i in range(1, 5) for j in range(i + 1, 5)])
    for perm in itertools.permutations(range(1, 5)):
        assert check_lbfs(k4, VertexOrdering(perm)).accepted


def test_ldfs_examples():
    assert check_ldfs(P4_LIKE, VertexOrdering((1, 2, 4, 3))).accepted
    cert = check_ldfs(P4_LIKE, VertexOrdering.identity(4))
    assert not cert.accepted
    assert cert.witness["vertices"] == [2, 3, 4]
    assert replay_witness(P4_LIKE, VertexOrdering.identity(4), cert)
    edgeless = Graph.from_edges(3, [])
    for perm in itertools.permutations((1, 2, 3)):
        assert check_ldfs(edgeless, VertexOrdering(perm)).accepted


def test_lex_full_table_entries():
    cert = check_lbfs(P4_LIKE, VertexOrdering((1, 2, 4, 3)), keep_table=True)
    table = cert.details["table"]
    assert table[(4, 3)] == "error"
    assert table[(2, 4)] == 1  # leftmost difference is vertex 1, a neighbor of 2
    assert table[(1, 2)] is None  # nothing distinguishes them left of position 1


def test_streaming_matches_table_implementation():
    rng = random.Random(31)
    for trial in range(60):
        g = random_graph(rng.randint(1, 8), rng.randint(0, 16), trial)
        sigma = random_permutation(g.n, rng)
        for checker in (check_lbfs, check_ldfs):
            a = checker(g, sigma)
            b = checker(g, sigma, streaming=True)
            assert a.accepted == b.accepted
            if not a.accepted:
                assert a.witness == b.witness


@pytest.mark.parametrize("order_id", PATTERN_IDS)
def test_certifiers_match_brute_pattern_conditions(order_id):
    rng = random.Random(43)
    brute = BRUTE_PATTERN[order_id]
    for trial in range(80):
        g = random_graph(rng.randint(1, 8), rng.randint(0, 18), trial + 1000)
        sigma = random_permutation(g.n, rng)
        got = check_ordering(g, order_id, sigma).accepted
        assert got == brute(g, sigma)


@pytest.mark.parametrize("order_id", PATTERN_IDS)
def test_certifiers_match_fixpoint_on_corpus(order_id, corpus4):
    order = BUILTIN_ORDERS[order_id]
    for g in corpus4:
        for perm in itertools.permutations(range(1, g.n + 1)):
            sigma = VertexOrdering(perm)
            assert check_ordering(g, order_id, sigma).accepted == check_fixpoint(g, order, sigma).accepted


def test_hierarchy_consistency_between_certifiers():
    rng = random.Random(77)
    for trial in range(120):
        g = random_graph(rng.randint(1, 8), rng.randint(0, 18), trial)
        sigma = random_permutation(g.n, rng)
        if check_lbfs(g, sigma).accepted:
            assert check_bfs(g, sigma).accepted
        if check_ldfs(g, sigma).accepted:
            assert check_dfs(g, sigma).accepted
        if check_bfs(g, sigma).accepted or check_dfs(g, sigma).accepted:
            assert check_generic(g, sigma).accepted


def test_witnesses_replay_against_their_pattern():
    rng = random.Random(5)
    checkers = {
        "gen": check_generic,
        "bfs": check_bfs,
        "dfs": check_dfs,
        "lbfs": check_lbfs,
        "ldfs": check_ldfs,
    }
    rejects = 0
    for trial in range(250):
        g = random_graph(rng.randint(2, 8), rng.randint(1, 18), trial)
        sigma = random_permutation(g.n, rng)
        for order_id, checker in checkers.items():
            cert = checker(g, sigma)
            if not cert.accepted:
                rejects += 1
                assert replay_witness(g, sigma, cert), (order_id, g.edges(), sigma.order)
    assert rejects > 100


def test_certifiers_reject_directed_graphs():
    g = Graph.from_edges(3, [(1, 2)], directed=True)
    sigma = VertexOrdering.identity(3)
    for checker in (check_generic, check_bfs, check_dfs, check_lbfs, check_ldfs):
        with pytest.raises(ValueError, match="undirected"):
            checker(g, sigma)


def test_recognize_routes_non_pattern_orders_to_fixpoint():
    g = P4_LIKE
    sigma = tbls_run(g, BUILTIN_ORDERS["mcs"], VertexOrdering.identity(4))
    cert, method = recognize(g, BUILTIN_ORDERS["mcs"], sigma)
    assert cert.accepted and method == "fixpoint"
    cert, method = recognize(g, BUILTIN_ORDERS["lbfs"], sigma)
    assert method == "lbfs-certifier"


def test_tables_can_be_shared_across_checks():
    sigma = VertexOrdering.identity(4)
    tables = prefix_neighbor_tables(P4_LIKE, sigma)
    assert check_generic(P4_LIKE, sigma, tables).accepted
    assert check_bfs(P4_LIKE, sigma, tables).accepted
    assert not check_dfs(P4_LIKE, sigma, tables).accepted
