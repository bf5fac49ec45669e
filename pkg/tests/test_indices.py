import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from kapex.families import (make_A, make_B, make_C, make_complete, make_cycle, make_path,
                            make_star, make_W)
from kapex.graph import GraphError, is_connected
from kapex.indices import (CLOSED_FORMS, EXACT_CONSTANTS, abc_alpha, azi, azi_lower_bound,
                           eval_closed_form, lower_bound_counts, psi)

from oracles import azi_direct
from test_graph import small_graphs


def test_psi_examples():
    assert psi(2, 9) == 8
    assert psi(3, 3) == F(729, 64)
    assert psi(1, 2) == 8
    assert psi(F(5, 2), 7) == (F(35, 2) / F(15, 2)) ** 3


def test_psi_domain():
    with pytest.raises(ValueError):
        psi(1, 1)
    with pytest.raises(TypeError):
        psi(1.5, 3)


def test_azi_examples():
    assert azi(make_cycle(5).graph) == 40
    assert azi(make_star(4).graph) == F(81, 8)
    assert azi(make_complete(4).graph) == F(2187, 32)


def test_azi_domain():
    with pytest.raises(GraphError):
        azi(make_path(2).graph)
    from kapex.graph import Graph

    with pytest.raises(GraphError):
        azi(Graph.from_edges(4, [(0, 1), (1, 2)]))


def test_abc_examples():
    assert abc_alpha(make_cycle(5).graph, 1) == F(5, 2)
    assert math.isclose(abc_alpha(make_star(4).graph, F(1, 2)), 3 * math.sqrt(2 / 3))
    assert abc_alpha(make_cycle(6).graph, -3) == azi(make_cycle(6).graph)


def test_lower_bound_examples():
    assert azi_lower_bound(5, 5, 0, 5) == F(625, 64) == azi(make_star(6).graph)
    assert azi_lower_bound(6, 0, 6, 2) == 48 == azi(make_cycle(6).graph)
    assert azi_lower_bound(15, 10, 2, 7) == 10 * F(7, 6) ** 3 + 16 + 3 * F(9, 4) ** 3


def test_closed_form_examples():
    assert eval_closed_form("w", n=9, c=1, s=3) == F(375, 64) + F(128, 27) + 32 == azi(make_W(9, 1, 3).graph)
    assert eval_closed_form("a_kk", n=15, k=4) == F(5259, 64) + F(125, 16) + 16 == azi(make_A(4, 4, 7).graph)
    assert eval_closed_form("c_44", n=15) == F(5789, 64) == azi(make_C(4, 4, 7).graph)
    assert eval_closed_form("a_kk", n=15, k=5) == F(6555, 64) == azi(make_A(5, 5, 5).graph)


@pytest.mark.parametrize("n", [15, 16, 30, 31, 60])
def test_exact_constants_close_the_gap(n):
    assert eval_closed_form("c_55", n=n, exact=True) == azi(make_C(5, 5, n - 10).graph)
    B = make_B(6, (n + 1) // 2 - 3, n // 2 - 3).graph
    assert eval_closed_form("b_6", n=n, exact=True) == azi(B)


def test_exact_constants_are_sums_of_fixed_edges():
    # C(5,5,n-10) minus its growing tail at any n isolates the constant
    n = 20
    assert azi(make_C(5, 5, n - 10).graph) - F((n - 12) ** 3, (n - 13) ** 2) == EXACT_CONSTANTS["c_55"]


def test_closed_form_errors():
    with pytest.raises(ValueError):
        eval_closed_form("nope", n=15)
    with pytest.raises(ValueError):
        eval_closed_form("a_split", n=14, k=4)
    assert set(CLOSED_FORMS) == {"w", "a_kk", "c_44", "c_55", "a_split", "b_6"}


@settings(max_examples=300, deadline=None)
@given(small_graphs(n_max=11))
def test_azi_matches_direct_sum_and_bound(G):
    if G.n < 3 or not is_connected(G):
        return
    val = azi(G)
    assert val == azi_direct(G)
    assert val == abc_alpha(G, -3)
    assert val >= azi_lower_bound(*lower_bound_counts(G))


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 200), st.integers(1, 200))
def test_psi_symmetric_and_positive(x, y):
    if x + y <= 2:
        return
    assert psi(x, y) == psi(y, x) > 0
