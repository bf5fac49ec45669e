"""Constructors for the named graph families.

Every constructor returns a :class:`ConstructedGraph` whose ``roles`` map names
distinguished vertices (triangle roots ``u1..u3``, ``special_pendant``,
``center``, ``hub_a``/``hub_b``) to vertex ids.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from .graph import Graph


class FamilyError(ValueError):
    """Raised for invalid family parameters or spec strings."""


@dataclass(frozen=True)
class ConstructedGraph:
    graph: Graph
    roles: dict[str, tuple[int, ...]] = field(default_factory=dict)

    def role(self, name: str) -> int:
        """First vertex carrying ``name``."""
        return self.roles[name][0]


class _Builder:
    def __init__(self) -> None:
        self.n = 0
        self.edges: list[tuple[int, int]] = []

    def vertex(self) -> int:
        self.n += 1
        return self.n - 1

    def edge(self, u: int, v: int) -> None:
        self.edges.append((u, v))

    def leaves(self, centre: int, count: int) -> list[int]:
        out = []
        for _ in range(count):
            v = self.vertex()
            self.edge(centre, v)
            out.append(v)
        return out

    def graph(self) -> Graph:
        return Graph.from_edges(self.n, self.edges)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise FamilyError(msg)


def _ints(params: Sequence[int]) -> None:
    for p in params:
        if isinstance(p, bool) or not isinstance(p, int):
            raise FamilyError(f"parameters must be integers, got {p!r}")


# --- hanging pieces attached at an existing root ------------------------------


def _hang_z(b: _Builder, root: int, q: int) -> None:
    """Hang a Z_q whose special pendant is ``root``: root - w - x, x has q-3 leaves."""
    w = b.vertex()
    x = b.vertex()
    b.edge(root, w)
    b.edge(w, x)
    b.leaves(x, q - 3)


def _hang_star_centre(b: _Builder, root: int, size: int) -> None:
    """Make ``root`` the centre of a star on ``size`` vertices."""
    b.leaves(root, size - 1)


def _hang_star_pendant(b: _Builder, root: int, size: int) -> None:
    """Make ``root`` a leaf of a star on ``size`` vertices."""
    y = b.vertex()
    b.edge(root, y)
    b.leaves(y, size - 2)


# --- elementary graphs ----------------------------------------------------------


def make_path(n: int) -> ConstructedGraph:
    _ints([n])
    _require(n >= 1, "path needs n >= 1")
    G = Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    return ConstructedGraph(G, {"ends": (0, n - 1)})


def make_cycle(n: int) -> ConstructedGraph:
    _ints([n])
    _require(n >= 3, "cycle needs n >= 3")
    return ConstructedGraph(Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)]), {})


def make_star(n: int) -> ConstructedGraph:
    """Star on ``n`` vertices with centre 0."""
    _ints([n])
    _require(n >= 2, "star needs n >= 2")
    return ConstructedGraph(Graph.from_edges(n, [(0, i) for i in range(1, n)]), {"center": (0,)})


def make_complete(n: int) -> ConstructedGraph:
    _ints([n])
    _require(n >= 1, "complete graph needs n >= 1")
    return ConstructedGraph(Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)]), {})


def make_complete_bipartite(a: int, b: int) -> ConstructedGraph:
    _ints([a, b])
    _require(a >= 1 and b >= 1, "complete bipartite graph needs both sides >= 1")
    G = Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])
    return ConstructedGraph(G, {"left": tuple(range(a)), "right": tuple(range(a, a + b))})


# --- named families -----------------------------------------------------------


def make_Z(q: int) -> ConstructedGraph:
    """Tree on q vertices: one degree-(q-2) vertex, one 2-vertex, q-2 leaves."""
    _ints([q])
    _require(q >= 4, "q >= 4 required")
    b = _Builder()
    p = b.vertex()
    _hang_z(b, p, q)
    w, x = 1, 2
    special = (p,) if q > 4 else (p, 3)
    return ConstructedGraph(b.graph(), {"special_pendant": special, "two_vertex": (w,), "center": (x,)})


def make_W(n: int, c: int, s: int) -> ConstructedGraph:
    """K_{2,c+1} with s-1 pendants on ``hub_a`` and n-s-c-2 on ``hub_b``."""
    _ints([n, c, s])
    _require(c >= 1, "c >= 1 required")
    _require(1 <= s and 2 * s <= n - c - 2, "1 <= s <= (n-c-2)/2 required")
    b = _Builder()
    ha, hb = b.vertex(), b.vertex()
    for _ in range(c + 1):
        m = b.vertex()
        b.edge(ha, m)
        b.edge(hb, m)
    b.leaves(ha, s - 1)
    b.leaves(hb, n - s - c - 2)
    return ConstructedGraph(b.graph(), {"hub_a": (ha,), "hub_b": (hb,)})


_Hanger = Callable[[_Builder, int, int], None]


def _triangle(s: Sequence[int], hangers: Sequence[_Hanger]) -> ConstructedGraph:
    b = _Builder()
    u = [b.vertex() for _ in range(3)]
    b.edge(u[0], u[1])
    b.edge(u[1], u[2])
    b.edge(u[0], u[2])
    for ui, si, hang in zip(u, s, hangers):
        hang(b, ui, si)
    return ConstructedGraph(b.graph(), {"u1": (u[0],), "u2": (u[1],), "u3": (u[2],)})


def make_A(s1: int, s2: int, s3: int) -> ConstructedGraph:
    """Triangle whose roots are special pendants of Z_{s1}, Z_{s2}, Z_{s3}."""
    _ints([s1, s2, s3])
    _require(min(s1, s2, s3) >= 4, "A needs min(s1, s2, s3) >= 4")
    return _triangle((s1, s2, s3), (_hang_z, _hang_z, _hang_z))


def make_B(s1: int, s2: int, s3: int) -> ConstructedGraph:
    """Like A but u1 is the centre of a star on s1 vertices."""
    _ints([s1, s2, s3])
    _require(s1 >= 2 and min(s2, s3) >= 4, "B needs s1 >= 2 and min(s2, s3) >= 4")
    return _triangle((s1, s2, s3), (_hang_star_centre, _hang_z, _hang_z))


def make_C(s1: int, s2: int, s3: int) -> ConstructedGraph:
    """u1 star centre, u2 star leaf, u3 special pendant of Z_{s3}."""
    _ints([s1, s2, s3])
    _require(s1 >= 2 and s2 >= 3 and s3 >= 4, "C needs s1 >= 2, s2 >= 3, s3 >= 4")
    return _triangle((s1, s2, s3), (_hang_star_centre, _hang_star_pendant, _hang_z))


def make_D(s1: int, s2: int, s3: int) -> ConstructedGraph:
    """u1 star centre, u2 and u3 star leaves."""
    _ints([s1, s2, s3])
    _require(s1 >= 2 and min(s2, s3) >= 3, "D needs s1 >= 2 and min(s2, s3) >= 3")
    return _triangle((s1, s2, s3), (_hang_star_centre, _hang_star_pendant, _hang_star_pendant))


def make_E(s1: int, s2: int, s3: int) -> ConstructedGraph:
    """u1 and u2 star centres, u3 special pendant of Z_{s3}."""
    _ints([s1, s2, s3])
    _require(min(s1, s2) >= 2 and s3 >= 4, "E needs min(s1, s2) >= 2 and s3 >= 4")
    return _triangle((s1, s2, s3), (_hang_star_centre, _hang_star_centre, _hang_z))


def make_Q(s: Sequence[int]) -> ConstructedGraph:
    """Two hubs joined by len(s) internally disjoint paths; path i has s[i] vertices."""
    s = list(s)
    _ints(s)
    _require(len(s) >= 2, "Q needs at least two paths")
    _require(all(x >= 2 for x in s), "Q needs every path length s_i >= 2")
    _require(sum(1 for x in s if x == 2) <= 1, "Q allows s_i = 2 for at most one i")
    b = _Builder()
    hu, hv = b.vertex(), b.vertex()
    for x in s:
        prev = hu
        for _ in range(x - 2):
            w = b.vertex()
            b.edge(prev, w)
            prev = w
        b.edge(prev, hv)
    return ConstructedGraph(b.graph(), {"hub_a": (hu,), "hub_b": (hv,)})


# --- spec strings ---------------------------------------------------------------

_TAGS: dict[str, tuple[Callable[..., ConstructedGraph], int | None]] = {
    "path": (make_path, 1),
    "cycle": (make_cycle, 1),
    "star": (make_star, 1),
    "complete": (make_complete, 1),
    "completebipartite": (make_complete_bipartite, 2),
    "z": (make_Z, 1),
    "w": (make_W, 3),
    "a": (make_A, 3),
    "b": (make_B, 3),
    "c": (make_C, 3),
    "d": (make_D, 3),
    "e": (make_E, 3),
    "q": (make_Q, None),
}
_ALIASES = {"p": "path", "k": "complete", "kbip": "completebipartite", "bipartite": "completebipartite"}


@dataclass(frozen=True)
class FamilySpec:
    tag: str
    params: tuple[int, ...]

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parse strings such as ``A:4,4,7``, ``W:9,1,3`` or ``Q:3,3,3``."""
        if ":" not in text:
            raise FamilyError(f"family spec {text!r} must look like TAG:p1,p2,...")
        tag, _, rest = text.partition(":")
        key = tag.strip().lower()
        key = _ALIASES.get(key, key)
        if key not in _TAGS:
            raise FamilyError(f"unknown family tag {tag!r}")
        try:
            params = tuple(int(p) for p in rest.split(",") if p.strip())
        except ValueError as exc:
            raise FamilyError(f"non-integer parameter in {text!r}") from exc
        arity = _TAGS[key][1]
        if arity is not None and len(params) != arity:
            raise FamilyError(f"{tag} takes {arity} parameter(s), got {len(params)}")
        return cls(key, params)

    def build(self) -> ConstructedGraph:
        ctor, arity = _TAGS[self.tag]
        return ctor(list(self.params)) if arity is None else ctor(*self.params)

    def __str__(self) -> str:
        tag = self.tag.upper() if len(self.tag) == 1 else self.tag
        return f"{tag}:{','.join(map(str, self.params))}"


def build(text: str) -> ConstructedGraph:
    return FamilySpec.parse(text).build()
