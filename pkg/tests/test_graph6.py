import io

import networkx as nx
import pytest
from hypothesis import given, settings

from kapex.families import make_A, make_cycle
from kapex.graph import GraphError
from kapex.graph6 import from_graph6, read_graph6_lines, to_dot, to_graph6, write_graph6

from oracles import to_nx
from test_graph import small_graphs


@settings(max_examples=300, deadline=None)
@given(small_graphs(n_max=70))
def test_round_trip_and_networkx_bytes(G):
    text = to_graph6(G)
    assert from_graph6(text) == G
    assert to_graph6(from_graph6(text)) == text
    assert text == nx.to_graph6_bytes(to_nx(G), header=False).decode().strip()


def test_large_order_header():
    G = make_cycle(70).graph
    text = to_graph6(G)
    assert text.startswith("~")
    assert from_graph6(text) == G


def test_header_prefix_accepted():
    assert from_graph6(">>graph6<<Bw").m == 3


@pytest.mark.parametrize("bad", ["", "!!bad", "Bx", "B", "Dhc?"])
def test_malformed_strings(bad):
    with pytest.raises(GraphError):
        from_graph6(bad)


def test_line_reader_numbers_lines():
    rows = list(read_graph6_lines(io.StringIO("Bw\n\nDhc\n")))
    assert rows == [(1, "Bw"), (3, "Dhc")]


def test_writer_and_dot():
    buf = io.StringIO()
    assert write_graph6([make_cycle(5).graph], buf) == 1
    assert buf.getvalue() == "Dhc\n"
    dot = to_dot(make_A(4, 4, 7).graph, labels={0: "u1"})
    assert dot.startswith("graph G {") and 'label="u1"' in dot and dot.count("--") == 15
