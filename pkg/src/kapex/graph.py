"""Simple undirected graphs on vertices ``0..n-1`` and the structural queries
used throughout the package (base graph, hanging trees, special cycles)."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised when a graph violates the precondition of an operation."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph. ``adj[v]`` is the neighbour set of ``v``."""

    n: int
    adj: tuple[frozenset[int], ...] = field(repr=False)

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise GraphError("adjacency length must equal n")
        for v, nbrs in enumerate(self.adj):
            if v in nbrs:
                raise GraphError(f"self-loop at vertex {v}")
            for w in nbrs:
                if not 0 <= w < self.n:
                    raise GraphError(f"neighbour {w} of {v} out of range")
                if v not in self.adj[w]:
                    raise GraphError(f"asymmetric adjacency between {v} and {w}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if v in nbrs[u]:
                raise GraphError(f"multi-edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(frozenset(s) for s in nbrs))

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adj)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhoods as integer bitmasks."""
        return tuple(sum(1 << w for w in a) for a in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def _check_vertex(G: Graph, v: int) -> None:
    if not isinstance(v, int) or not 0 <= v < G.n:
        raise GraphError(f"vertex {v!r} out of range for n={G.n}")


def degree(G: Graph, v: int) -> int:
    _check_vertex(G, v)
    return len(G.adj[v])


def max_degree(G: Graph) -> int:
    return max(G.degrees, default=0)


def is_connected(G: Graph) -> bool:
    if G.n == 0:
        return False
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in G.adj[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == G.n


def require_connected(G: Graph) -> None:
    if not is_connected(G):
        raise GraphError("graph is not connected")


def cyclomatic_number(G: Graph) -> int:
    require_connected(G)
    return G.m - G.n + 1


def is_tree(G: Graph) -> bool:
    return G.n >= 1 and G.m == G.n - 1 and is_connected(G)


# --- elementary edits -------------------------------------------------------


def induced_subgraph(G: Graph, keep: Sequence[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``keep`` relabelled to ``0..len(keep)-1``.

    Returns the graph and the list mapping new ids to old ids.
    """
    old = sorted(set(keep))
    index = {v: i for i, v in enumerate(old)}
    edges = [(index[u], index[v]) for u, v in G.edges if u in index and v in index]
    return Graph.from_edges(len(old), edges), old


def remove_vertices(G: Graph, removed: Iterable[int]) -> Graph:
    gone = set(removed)
    return induced_subgraph(G, [v for v in range(G.n) if v not in gone])[0]


def add_edge(G: Graph, u: int, v: int) -> Graph:
    _check_vertex(G, u)
    _check_vertex(G, v)
    if u == v or G.has_edge(u, v):
        raise GraphError(f"cannot add edge ({u}, {v})")
    return Graph.from_edges(G.n, list(G.edges) + [(u, v)])


def remove_edge(G: Graph, u: int, v: int) -> Graph:
    if not G.has_edge(u, v):
        raise GraphError(f"edge ({u}, {v}) not present")
    e = (min(u, v), max(u, v))
    return Graph.from_edges(G.n, [f for f in G.edges if f != e])


def relabel(G: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    return Graph.from_edges(G.n, [(perm[u], perm[v]) for u, v in G.edges])


# --- base graph and hanging trees -------------------------------------------


def _strip_pendants(G: Graph) -> tuple[list[bool], list[int]]:
    """Recursively delete pendant vertices.

    Returns ``alive`` flags (the surviving core) and ``parent[v]``: for a
    deleted vertex the neighbour it hung from at deletion time, else -1.
    """
    deg = list(G.degrees)
    alive = [True] * G.n
    parent = [-1] * G.n
    queue = deque(v for v in range(G.n) if deg[v] <= 1)
    while queue:
        v = queue.popleft()
        if not alive[v] or deg[v] > 1:
            continue
        alive[v] = False
        for w in G.adj[v]:
            if alive[w]:
                parent[v] = w
                deg[w] -= 1
                if deg[w] <= 1:
                    queue.append(w)
    return alive, parent


def base_graph(G: Graph) -> tuple[Graph, list[int]]:
    """The base graph (recursive pendant deletion) and its vertex injection.

    ``mapping[i]`` is the vertex of ``G`` that became vertex ``i`` of the base
    graph.
    """
    require_connected(G)
    if G.m < G.n:
        raise GraphError("base graph is undefined for trees")
    alive, _ = _strip_pendants(G)
    return induced_subgraph(G, [v for v in range(G.n) if alive[v]])


def hanging_roots(G: Graph) -> list[int]:
    """For each vertex, the base-graph vertex whose hanging tree contains it."""
    require_connected(G)
    if G.m < G.n:
        raise GraphError("hanging trees are undefined for trees")
    alive, parent = _strip_pendants(G)
    root = [-1] * G.n

    def find(v: int) -> int:
        path = []
        while root[v] < 0 and not alive[v]:
            path.append(v)
            v = parent[v]
        r = v if alive[v] else root[v]
        for u in path:
            root[u] = r
        return r

    for v in range(G.n):
        root[v] = v if alive[v] else find(v)
    return root


def hanging_tree(G: Graph, v: int) -> tuple[int, ...]:
    """Vertex set of the maximal pendant tree rooted at base vertex ``v``."""
    _check_vertex(G, v)
    root = hanging_roots(G)
    if root[v] != v:
        raise GraphError(f"vertex {v} is not in the base graph")
    return tuple(u for u in range(G.n) if root[u] == v)


def hanging_tree_sizes(G: Graph) -> dict[int, int]:
    root = hanging_roots(G)
    sizes: dict[int, int] = {}
    for r in root:
        sizes[r] = sizes.get(r, 0) + 1
    return dict(sorted(sizes.items()))


# --- cycles -----------------------------------------------------------------


def chordless_cycles(G: Graph, allowed: Iterable[int] | None = None) -> list[tuple[int, ...]]:
    """All induced cycles (length >= 3) within ``allowed`` vertices.

    Each cycle starts at its smallest vertex and runs towards the smaller of
    that vertex's two cycle neighbours.
    """
    ok = set(range(G.n)) if allowed is None else set(allowed)
    out: list[tuple[int, ...]] = []

    def extend(path: list[int], on_path: set[int]) -> None:
        s, last = path[0], path[-1]
        for w in sorted(G.adj[last]):
            if w <= s or w not in ok or w in on_path:
                continue
            # w may touch only `last` and possibly the start among path vertices
            touches = G.adj[w] & on_path
            if touches - {last, s}:
                continue
            if s in touches:
                if len(path) >= 2 and path[1] < w:
                    out.append(tuple(path + [w]))
                continue
            path.append(w)
            on_path.add(w)
            extend(path, on_path)
            path.pop()
            on_path.discard(w)

    for s in sorted(ok):
        for w in sorted(G.adj[s]):
            if w > s and w in ok:
                extend([s, w], {s, w})
    return sorted(out)


def special_cycles(G: Graph) -> list[tuple[int, ...]]:
    """Chordless cycles whose every vertex has degree at least 3 in ``G``."""
    require_connected(G)
    branching = [v for v in range(G.n) if G.degrees[v] >= 3]
    return chordless_cycles(G, branching)
