import random

import pytest
from hypothesis import given, settings

from kapex.apex import (all_quasi_sets, apex_number, apex_value, certificate_json, is_k_apex,
                        max_induced_tree_order, unicyclic_apex)
from kapex.enumeration import enum_ccyclic
from kapex.families import make_A, make_C, make_complete, make_cycle, make_path
from kapex.graph import Graph, GraphError, hanging_tree, is_connected

from oracles import atlas_connected, brute_apex, brute_quasi_sets
from test_graph import small_graphs


def test_examples():
    assert apex_number(make_path(6).graph).k == 0
    cert = apex_number(make_cycle(3).graph)
    assert cert.k == 1 and len(cert.quasi_set) == 1
    assert apex_number(make_complete(4).graph).k == 2
    assert unicyclic_apex(make_A(4, 4, 7).graph) == 4
    assert unicyclic_apex(make_cycle(9).graph) == 1
    C = make_C(4, 4, 7).graph
    assert unicyclic_apex(C) == 4
    assert is_k_apex(C, 4) and not is_k_apex(C, 3)
    assert is_k_apex(make_complete(4).graph, 2)


def test_quasi_set_examples():
    assert all_quasi_sets(make_cycle(3).graph, 1) == [(0,), (1,), (2,)]
    A = make_A(4, 4, 4)
    trees = sorted(tuple(sorted(hanging_tree(A.graph, A.role(r)))) for r in ("u1", "u2", "u3"))
    assert all_quasi_sets(A.graph, 4) == trees
    assert all_quasi_sets(make_path(5).graph, 0) == [()]


def test_errors():
    with pytest.raises(GraphError):
        apex_number(Graph.from_edges(4, [(0, 1), (2, 3)]))
    with pytest.raises(GraphError):
        unicyclic_apex(make_complete(4).graph)
    with pytest.raises(ValueError):
        all_quasi_sets(make_cycle(4).graph, 2)
    with pytest.raises(ValueError):
        is_k_apex(make_cycle(4).graph, 0)


def test_certificates_check_and_serialise():
    G = make_A(4, 4, 7).graph
    cert = apex_number(G)
    assert cert.check(G)
    doc = certificate_json(cert)
    assert doc["k"] == 4 and len(doc["quasi_set"]) == 4


def test_matches_brute_force_up_to_seven():
    for G in atlas_connected(7):
        assert apex_value(G) == brute_apex(G)


def test_quasi_sets_match_brute_force_up_to_six():
    for G in atlas_connected(6):
        k = brute_apex(G)
        assert all_quasi_sets(G, k) == brute_quasi_sets(G, k)


def test_unicyclic_fast_path_small():
    for n in range(3, 11):
        for G in enum_ccyclic(n, 1):
            assert unicyclic_apex(G) == apex_value(G, reduce=False)


def test_quasi_sets_of_unicyclic_are_hanging_trees():
    # k >= 2: every optimal removal set is one whole hanging tree, which induces a tree
    from kapex.graph import induced_subgraph, is_tree

    for n in range(6, 11):
        for G in enum_ccyclic(n, 1):
            k = unicyclic_apex(G)
            if k < 2:
                continue
            for X in all_quasi_sets(G, k):
                sub, _ = induced_subgraph(G, X)
                assert is_connected(sub) and is_tree(sub)


@settings(max_examples=150, deadline=None)
@given(small_graphs(n_max=12))
def test_reduction_agrees_with_direct_search(G):
    if not is_connected(G):
        return
    assert max_induced_tree_order(G) == max_induced_tree_order(G, reduce=False)
    cert = apex_number(G)
    assert cert.check(G)


def test_random_larger_graphs_against_direct_search():
    from kapex.verify import random_connected_graph

    rng = random.Random(11)
    for _ in range(60):
        G = random_connected_graph(rng, rng.randrange(12, 19), rng.randrange(1, 6))
        assert apex_value(G) == apex_value(G, reduce=False)
