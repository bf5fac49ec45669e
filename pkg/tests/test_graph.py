import pytest
from hypothesis import given, settings, strategies as st

from kapex.families import make_A, make_complete, make_cycle, make_path, make_star, make_W, make_Z
from kapex.graph import (Graph, GraphError, base_graph, cyclomatic_number, degree, hanging_tree,
                         hanging_tree_sizes, induced_subgraph, is_connected, is_tree, relabel,
                         special_cycles)

from oracles import to_nx


def test_degree_examples():
    C5 = make_cycle(5).graph
    assert all(degree(C5, v) == 2 for v in range(5))
    assert degree(make_star(4).graph, 0) == 3
    Z5 = make_Z(5)
    assert degree(Z5.graph, Z5.role("center")) == 3


def test_connectivity_examples():
    assert is_connected(make_complete(4).graph)
    assert not is_connected(Graph.from_edges(4, [(0, 1), (2, 3)]))
    assert is_connected(make_path(7).graph)


def test_cyclomatic_examples():
    assert cyclomatic_number(make_path(6).graph) == 0
    assert cyclomatic_number(make_W(9, 1, 3).graph) == 1
    assert cyclomatic_number(make_complete(4).graph) == 3


def test_base_graph_examples():
    C5 = make_cycle(5).graph
    B, mapping = base_graph(C5)
    assert B == C5 and mapping == list(range(5))
    B, _ = base_graph(make_A(4, 4, 7).graph)
    assert B.n == 3 and B.m == 3
    B, _ = base_graph(make_W(9, 1, 3).graph)
    assert B.n == 4 and B.m == 4 and set(B.degrees) == {2}


def test_base_graph_rejects_trees():
    with pytest.raises(GraphError):
        base_graph(make_path(5).graph)


def test_hanging_tree_examples():
    A = make_A(4, 4, 7)
    assert len(hanging_tree(A.graph, A.role("u3"))) == 7
    assert hanging_tree(make_cycle(5).graph, 3) == (3,)
    W = make_W(9, 1, 3)
    big = max(W.graph.degrees)
    assert big == 5
    hub = W.graph.degrees.index(5)
    assert len(hanging_tree(W.graph, hub)) == 4


def test_special_cycles_examples():
    A = make_A(4, 4, 7)
    assert [set(c) for c in special_cycles(A.graph)] == [{A.role("u1"), A.role("u2"), A.role("u3")}]
    assert special_cycles(make_cycle(6).graph) == []
    assert len(special_cycles(make_complete(4).graph)) == 4


def test_malformed_input_rejected():
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 3)])


@st.composite
def small_graphs(draw, n_max=9):
    n = draw(st.integers(1, n_max))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@settings(max_examples=200, deadline=None)
@given(small_graphs())
def test_queries_agree_with_networkx(G):
    import networkx as nx

    H = to_nx(G)
    assert is_connected(G) == nx.is_connected(H)
    assert [d for _, d in sorted(H.degree)] == list(G.degrees)
    assert is_tree(G) == nx.is_tree(H)
    if is_connected(G):
        assert cyclomatic_number(G) == G.m - G.n + 1


@settings(max_examples=100, deadline=None)
@given(small_graphs(), st.randoms(use_true_random=False))
def test_relabel_preserves_structure(G, rnd):
    perm = list(range(G.n))
    rnd.shuffle(perm)
    H = relabel(G, perm)
    assert sorted(H.degrees) == sorted(G.degrees)
    assert H.m == G.m


@settings(max_examples=150, deadline=None)
@given(small_graphs())
def test_hanging_trees_partition_vertices(G):
    if not is_connected(G) or G.m < G.n:
        return
    sizes = hanging_tree_sizes(G)
    assert sum(sizes.values()) == G.n
    B, mapping = base_graph(G)
    assert sorted(sizes) == sorted(mapping)
    assert min(B.degrees) >= 2
    sub, _ = induced_subgraph(G, mapping)
    assert sub == B
