"""Graph surgeries whose effect on AZI is checked as a property."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Real

from .canon import canonical_form, rooted_tree_code
from .families import ConstructedGraph, make_C, make_Z
from .graph import (Graph, GraphError, add_edge as _add_edge, hanging_roots, hanging_tree,
                    is_connected, remove_edge, remove_vertices, require_connected)
from .indices import abc_alpha, azi


@dataclass(frozen=True)
class SurgeryOutcome:
    """``delta`` is ``index(before) - index(after)``; ``roles`` name vertices of ``after``."""

    before: Graph
    after: Graph
    delta: Fraction | float
    roles: dict[str, int] = field(default_factory=dict)

    @property
    def increase(self) -> Fraction | float:
        return -self.delta


def _base_vertex(G: Graph, v: int) -> list[int]:
    require_connected(G)
    if G.m < G.n:
        raise GraphError("surgery needs a graph with a cycle")
    if not 0 <= v < G.n:
        raise GraphError(f"vertex {v} out of range")
    root = hanging_roots(G)
    if root[v] != v:
        raise GraphError(f"vertex {v} is not in the base graph")
    return root


def _replace_tree(G: Graph, u: int, extra_edges) -> tuple[Graph, int]:
    """Drop u's hanging tree except u, then append new vertices via ``extra_edges(u, first_id)``."""
    tree = set(hanging_tree(G, u)) - {u}
    keep = [v for v in range(G.n) if v not in tree]
    index = {v: i for i, v in enumerate(keep)}
    trimmed = remove_vertices(G, tree)
    nu = index[u]
    edges = list(trimmed.edges) + extra_edges(nu, trimmed.n)
    n_new = max([trimmed.n - 1] + [max(e) for e in edges]) + 1
    return Graph.from_edges(n_new, edges), nu


def _pendant_star_edges(size: int):
    """Root - w - x with x carrying size-3 further leaves (a star on size-1 vertices hung by a leaf)."""

    def build(root: int, first: int) -> list[tuple[int, int]]:
        w, x = first, first + 1
        out = [(root, w), (w, x)]
        out += [(x, first + 2 + i) for i in range(size - 3)]
        return out

    return build


def gstar(G: Graph, u0: int) -> SurgeryOutcome:
    """Replace the hanging tree at ``u0`` (q vertices) by Z_q with ``u0`` as special pendant."""
    _base_vertex(G, u0)
    q = len(hanging_tree(G, u0))
    if q < 3:
        raise GraphError(f"hanging tree at {u0} has {q} < 3 vertices")
    after, nu = _replace_tree(G, u0, _pendant_star_edges(q))
    return SurgeryOutcome(G, after, azi(G) - azi(after), {"u0": nu})


def _host_with_stars(G: Graph, w1: int, w2: int, s1: int, s2: int) -> ConstructedGraph:
    edges = list(G.edges)
    nxt = G.n
    roles = {}
    for tag, w, s in (("1", w1, s1), ("2", w2, s2)):
        part = _pendant_star_edges(s)(w, nxt)
        roles["star_center_" + tag] = (nxt + 1,)
        edges += part
        nxt += s - 1
    return ConstructedGraph(Graph.from_edges(nxt, edges), roles)


def rebalance_stars(G: Graph, w1: int, w2: int, s1: int, s2: int
                    ) -> tuple[ConstructedGraph, ConstructedGraph, Fraction]:
    """Hang stars of orders s1-1, s2-1 by a leaf at w1, w2, and compare with (s1-1, s2+1)."""
    require_connected(G)
    for w in (w1, w2):
        if not 0 <= w < G.n:
            raise GraphError(f"vertex {w} out of range")
    if s2 < 4 or s1 < s2 + 2:
        raise ValueError("need s2 >= 4 and s1 >= s2 + 2")
    first = _host_with_stars(G, w1, w2, s1, s2)
    second = _host_with_stars(G, w1, w2, s1 - 1, s2 + 1)
    return first, second, azi(first.graph) - azi(second.graph)


def _z_code(q: int) -> str:
    Z = make_Z(q)
    return rooted_tree_code(Z.graph, Z.role("special_pendant"))


def z_to_star(G: Graph, u: int) -> SurgeryOutcome:
    """Swap a hanging Z_q (u its special pendant, q in 4..5) for a star hung by a leaf at u."""
    _base_vertex(G, u)
    tree = hanging_tree(G, u)
    q = len(tree)
    if not 4 <= q <= 5:
        raise GraphError(f"hanging tree order {q} outside 4..5")
    if G.degrees[u] != 3:
        raise GraphError(f"vertex {u} has degree {G.degrees[u]}, expected 3")
    if rooted_tree_code(G, u, tree) != _z_code(q):
        raise GraphError(f"hanging tree at {u} is not Z_{q} rooted at its special pendant")

    def star(root: int, first: int) -> list[tuple[int, int]]:
        y = first
        return [(root, y)] + [(y, first + 1 + i) for i in range(q - 2)]

    after, nu = _replace_tree(G, u, star)
    return SurgeryOutcome(G, after, azi(G) - azi(after), {"u": nu})


def c_shift(s1: int, s2: int, s3: int) -> tuple[ConstructedGraph, ConstructedGraph, Fraction]:
    """Compare C(s1, s2, s3) with C(s1-1, s2, s3+1)."""
    if s3 < 5 or s1 < 3:
        raise ValueError("need s3 >= 5 and s1 >= 3")
    a, b = make_C(s1, s2, s3), make_C(s1 - 1, s2, s3 + 1)
    return a, b, azi(a.graph) - azi(b.graph)


def delete_cycle_edge_at_2vertex(G: Graph, u0: int) -> SurgeryOutcome:
    """Delete the cycle edge at the 2-vertex ``u0`` whose removal lowers AZI most."""
    require_connected(G)
    if not 0 <= u0 < G.n or G.degrees[u0] != 2:
        raise GraphError(f"vertex {u0} is not a 2-vertex")
    best = None
    for v0 in sorted(G.adj[u0]):
        H = remove_edge(G, u0, v0)
        if not is_connected(H):
            continue
        d = azi(G) - azi(H)
        if best is None or d > best.delta:
            best = SurgeryOutcome(G, H, d, {"u0": u0, "v0": v0})
    if best is None:
        raise GraphError(f"vertex {u0} is not on a cycle")
    return best


def add_edge(G: Graph, u: int, v: int, alpha: Real = -3) -> SurgeryOutcome:
    """Add the edge uv; ``increase`` is the signed change of the ABC index with exponent alpha."""
    require_connected(G)
    if alpha == 0 or alpha > Fraction(1, 2):
        raise ValueError("need alpha <= 1/2 and alpha != 0")
    H = _add_edge(G, u, v)
    return SurgeryOutcome(G, H, abc_alpha(G, alpha) - abc_alpha(H, alpha), {"u": u, "v": v})


# --- rerooting comparison with hypothesis classification ------------------------

CONDITIONS = ("t0_v0deg3_q7", "t0_v0deg4_q5", "t1_u0deg3_q6", "t1_u0deg4_q5", "t2")


@dataclass(frozen=True)
class RerootVerdict:
    applicable: bool
    reason: str = ""
    t: int | None = None
    q: int | None = None
    conditions: tuple[str, ...] = ()
    delta: Fraction | None = None

    @property
    def holds(self) -> bool:
        """True when no listed condition applies or the strict decrease is observed."""
        return not self.conditions or (self.delta is not None and self.delta > 0)


def prop_2_1_check(G: Graph, u0: int) -> RerootVerdict:
    """Classify the hypotheses met at ``u0`` and test AZI(G) > AZI(G*(u0)) when any applies.

    ``t`` is the number of non-pendant vertices of the hanging tree other than
    ``u0``; ``v0``/``w0`` are the two base neighbours of ``u0`` with
    ``d(v0) >= d(w0)``.
    """
    root = _base_vertex(G, u0)
    base_nbrs = [w for w in G.adj[u0] if root[w] == w]
    if len(base_nbrs) != 2:
        return RerootVerdict(False, f"u0 has {len(base_nbrs)} base neighbours, hypothesis needs 2")
    v0, w0 = sorted(base_nbrs, key=lambda x: (-G.degrees[x], x))
    if G.degrees[w0] < 3:
        return RerootVerdict(False, "a base neighbour of u0 has degree below 3")
    tree = hanging_tree(G, u0)
    q = len(tree)
    if q < 3:
        return RerootVerdict(False, f"hanging tree has {q} < 3 vertices", q=q)
    t = sum(1 for x in tree if x != u0 and G.degrees[x] > 1)
    out = gstar(G, u0)
    if canonical_form(out.after) == canonical_form(G):
        return RerootVerdict(False, "graph already equals its rerooted form", t=t, q=q)
    dv, du = G.degrees[v0], G.degrees[u0]
    conds = []
    if t == 0 and dv == 3 and q >= 7:
        conds.append(CONDITIONS[0])
    if t == 0 and dv >= 4 and q >= 5:
        conds.append(CONDITIONS[1])
    if t == 1 and du == 3 and q >= 6:
        conds.append(CONDITIONS[2])
    if t == 1 and du >= 4 and q >= 5:
        conds.append(CONDITIONS[3])
    if t >= 2:
        conds.append(CONDITIONS[4])
    return RerootVerdict(True, "", t, q, tuple(conds), out.delta)
