"""Canonical labelling and automorphisms.

Pendant trees are folded into vertex colours (AHU codes) and the remaining
2-core is labelled by colour refinement plus individualisation, branching only
on one representative of each twin class.  Trees are encoded directly by their
centre-rooted AHU code.
"""

from __future__ import annotations

from collections import deque
from typing import Sequence

from .graph import Graph

CanonicalForm = bytes


def _ahu(children: Sequence[Sequence[int]], v: int, memo: dict[int, str]) -> str:
    stack = [(v, False)]
    while stack:
        u, done = stack.pop()
        if u in memo:
            continue
        if done:
            memo[u] = "(" + "".join(sorted(memo[c] for c in children[u])) + ")"
        else:
            stack.append((u, True))
            stack.extend((c, False) for c in children[u] if c not in memo)
    return memo[v]


def rooted_tree_code(G: Graph, root: int, vertices: Sequence[int] | None = None) -> str:
    """AHU code of the tree induced on ``vertices`` (default: all) rooted at ``root``."""
    allowed = set(range(G.n)) if vertices is None else set(vertices)
    children: list[list[int]] = [[] for _ in range(G.n)]
    seen = {root}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in G.adj[u]:
            if w in allowed and w not in seen:
                seen.add(w)
                children[u].append(w)
                queue.append(w)
    return _ahu(children, root, {})


def _peel(G: Graph, comp: Sequence[int]):
    """Layered leaf peeling of one component.

    Returns (alive core set, children lists, centre info).  For a tree
    component the core is empty and centre info is ``(c,)`` or ``(a, b)``.
    """
    members = set(comp)
    deg = {v: len(G.adj[v]) for v in comp}
    alive = set(comp)
    children: dict[int, list[int]] = {v: [] for v in comp}
    layer = [v for v in comp if deg[v] <= 1]
    centre: tuple[int, ...] = ()
    while layer:
        if len(alive) <= 2 and all(deg[v] <= 1 for v in alive) and len(alive) == len(layer):
            centre = tuple(sorted(alive))
            break
        nxt = []
        for v in layer:
            alive.discard(v)
        for v in layer:
            for w in G.adj[v]:
                if w in alive and w in members:
                    children[w].append(v)
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = [w for w in dict.fromkeys(nxt) if w in alive and deg[w] <= 1]
        if not alive:
            break
    return alive, children, centre


def _components(G: Graph) -> list[list[int]]:
    seen = [False] * G.n
    comps = []
    for s in range(G.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in G.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


# --- colour refinement / individualisation ---------------------------------


def _refine(cells: list[list[int]], adj: Sequence[set[int]]) -> list[list[int]]:
    while True:
        cell_of = {}
        for i, c in enumerate(cells):
            for v in c:
                cell_of[v] = i
        out: list[list[int]] = []
        changed = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            sig = {v: tuple(sorted(cell_of[w] for w in adj[v])) for v in c}
            keys = sorted(set(sig.values()))
            if len(keys) == 1:
                out.append(c)
                continue
            changed = True
            for k in keys:
                out.append([v for v in c if sig[v] == k])
        cells = out
        if not changed:
            return cells


def _twins(adj: Sequence[set[int]], u: int, v: int) -> bool:
    return adj[u] - {v} == adj[v] - {u}


def _core_certificate(adj: Sequence[set[int]], keys: Sequence[str]) -> str:
    m = len(adj)
    order = sorted(set(keys))
    cells = [[v for v in range(m) if keys[v] == k] for k in order]
    best: list[tuple[tuple[int, int], ...] | None] = [None]

    def search(cells: list[list[int]]) -> None:
        cells = _refine(cells, adj)
        for i, c in enumerate(cells):
            if len(c) > 1:
                break
        else:
            pos = {c[0]: i for i, c in enumerate(cells)}
            cert = tuple(sorted((min(pos[u], pos[w]), max(pos[u], pos[w]))
                                for u in range(m) for w in adj[u] if u < w))
            if best[0] is None or cert < best[0]:
                best[0] = cert
            return
        reps: list[int] = []
        for v in c:
            if not any(_twins(adj, v, r) for r in reps):
                reps.append(v)
        for v in reps:
            search(cells[:i] + [[v], [w for w in c if w != v]] + cells[i + 1:])

    search(cells)
    layout = ",".join(f"{k}*{keys.count(k)}" for k in order)
    return layout + "#" + ";".join(f"{a}-{b}" for a, b in best[0])


def _component_certificate(G: Graph, comp: list[int]) -> str:
    alive, children, centre = _peel(G, comp)
    memo: dict[int, str] = {}
    if not alive:
        if len(centre) == 1:
            return "U" + _ahu(children, centre[0], memo)
        a, b = (_ahu(children, x, memo) for x in centre)
        return "B" + min(a, b) + max(a, b)
    core = sorted(alive)
    index = {v: i for i, v in enumerate(core)}
    keys = [_ahu(children, v, memo) for v in core]
    adj = [{index[w] for w in G.adj[v] if w in alive} for v in core]
    return "C" + _core_certificate(adj, keys)


def canonical_form(G: Graph) -> CanonicalForm:
    """Isomorphism-invariant certificate: equal iff the graphs are isomorphic."""
    parts = sorted(_component_certificate(G, comp) for comp in _components(G))
    return ("|".join(parts)).encode()


def is_isomorphic(G: Graph, H: Graph) -> bool:
    return G.n == H.n and G.m == H.m and canonical_form(G) == canonical_form(H)


# --- automorphisms ------------------------------------------------------------


def automorphisms(G: Graph, colors: Sequence[object] | None = None) -> list[tuple[int, ...]]:
    """All colour-preserving automorphisms as tuples ``perm[v] = image``.

    Plain backtracking in BFS order, so each new vertex is constrained by an
    already-mapped neighbour.  Intended for small graphs with small groups.
    """
    n = G.n
    if n == 0:
        return [()]
    col = list(colors) if colors is not None else [0] * n
    key = [(col[v], G.degrees[v]) for v in range(n)]
    order: list[int] = []
    seen = [False] * n
    for s in sorted(range(n), key=lambda v: -G.degrees[v]):
        if seen[s]:
            continue
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in sorted(G.adj[u]):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    image = [-1] * n
    used = [False] * n
    out: list[tuple[int, ...]] = []

    def place(i: int) -> None:
        if i == n:
            out.append(tuple(image))
            return
        v = order[i]
        mapped_nbrs = [image[w] for w in G.adj[v] if image[w] >= 0]
        if mapped_nbrs:
            cands = set(G.adj[mapped_nbrs[0]])
            for x in mapped_nbrs[1:]:
                cands &= G.adj[x]
        else:
            cands = set(range(n))
        for x in sorted(cands):
            if used[x] or key[x] != key[v]:
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if (u in G.adj[v]) != (image[u] in G.adj[x]):
                    ok = False
                    break
            if not ok:
                continue
            image[v] = x
            used[x] = True
            place(i + 1)
            image[v] = -1
            used[x] = False

    place(0)
    return sorted(out)
