"""Isomorphism-free generation of trees and connected c-cyclic graphs.

A connected cyclic graph is its base graph (minimum degree 2) with a rooted
tree hanging from every base vertex, and two such graphs are isomorphic exactly
when an automorphism of the base graph carries one tree assignment onto the
other.  Generation therefore runs over

  base graph B  ->  size vector t (orbit representative under Aut(B))
                ->  tree assignment (orbit representative under Stab(t)).

Base graphs come from kernel multigraphs (minimum degree 3, loops and parallel
edges allowed) by subdividing edges.  Free trees come from rooted trees via the
centroid.  The apex number depends only on (B, t), so k-filtering happens
before trees are expanded.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .apex import _bits
from .canon import automorphisms, canonical_form
from .graph import Graph, GraphError
from .indices import edge_weight

GUARDS = {0: 21, 1: 21, 2: 16, 3: 14}


class GuardError(GraphError):
    """Raised when a scope exceeds the default size guard."""


@dataclass(frozen=True)
class EnumScope:
    n: int
    c: int
    k: int | None = None
    shard: tuple[int, int] = (0, 1)
    guard_override: bool = False

    def __post_init__(self) -> None:
        idx, total = self.shard
        if total < 1 or not 0 <= idx < total:
            raise ValueError(f"invalid shard {idx}/{total}")
        if self.c not in GUARDS:
            raise ValueError(f"cyclomatic number must be in 0..3, got {self.c}")
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.k is not None and self.k < 0:
            raise ValueError("k must be nonnegative")
        if self.n > GUARDS[self.c] and not self.guard_override:
            raise GuardError(f"n={self.n} exceeds the guard {GUARDS[self.c]} for c={self.c}; "
                             "pass guard_override to proceed")


# --- rooted trees ---------------------------------------------------------------


class RootedTrees:
    """Table of all rooted trees by order, built lazily.

    Tree ``(s, i)`` is stored by the non-increasing tuple of its root's child
    keys.  Alongside: the root's child count and the float weight of all edges
    not touching the root.
    """

    def __init__(self) -> None:
        self.children: list[list[tuple[tuple[int, int], ...]]] = [[], [()]]
        self.rc: list[list[int]] = [[], [0]]
        self.inner_f: list[list[float]] = [[], [0.0]]
        self.child_degs: list[list[tuple[int, ...]]] = [[], [()]]

    def count(self, s: int) -> int:
        self.ensure(s)
        return len(self.children[s])

    def ensure(self, s: int) -> None:
        while len(self.children) <= s:
            self._add(len(self.children))

    def _multisets(self, total: int, cap: tuple[int, int]) -> Iterator[tuple[tuple[int, int], ...]]:
        if total == 0:
            yield ()
            return
        for sz in range(min(total, cap[0]), 0, -1):
            top = cap[1] if sz == cap[0] else len(self.children[sz]) - 1
            for i in range(top, -1, -1):
                for rest in self._multisets(total - sz, (sz, i)):
                    yield ((sz, i),) + rest

    def child_multisets(self, total: int, max_size: int) -> Iterator[tuple[tuple[int, int], ...]]:
        self.ensure(max_size)
        return self._multisets(total, (max_size, len(self.children[max_size]) - 1))

    def _add(self, s: int) -> None:
        kids = list(self._multisets(s - 1, (s - 1, len(self.children[s - 1]) - 1)))
        kids.reverse()
        self.children.append(kids)
        rc, inner, degs = [], [], []
        for ch in kids:
            rc.append(len(ch))
            d = tuple(1 + self.rc[a][b] for a, b in ch)
            degs.append(d)
            tot = 0.0
            for (a, b), dc in zip(ch, d):
                tot += self.inner_f[a][b] + sum(_psi_f(dc, x) for x in self.child_degs[a][b])
            inner.append(tot)
        self.rc.append(rc)
        self.inner_f.append(inner)
        self.child_degs.append(degs)

    def inner_exact(self, s: int, i: int) -> Fraction:
        return _inner_exact(self, s, i)

    def own_f(self, s: int, i: int, root_deg: int) -> float:
        """Float weight of the tree's edges, given the root's degree in the host."""
        return self.inner_f[s][i] + sum(_psi_f(root_deg, x) for x in self.child_degs[s][i])

    def own_exact(self, s: int, i: int, root_deg: int) -> Fraction:
        return self.inner_exact(s, i) + sum((edge_weight(root_deg, x) for x in self.child_degs[s][i]),
                                            Fraction(0))

    def attach(self, edges: list[tuple[int, int]], root: int, s: int, i: int, next_id: int) -> int:
        """Append the tree's edges below ``root`` using fresh ids; returns the next free id."""
        stack = [(root, s, i)]
        while stack:
            v, a, b = stack.pop(0)
            for ca, cb in self.children[a][b]:
                w = next_id
                next_id += 1
                edges.append((v, w))
                stack.append((w, ca, cb))
        return next_id


@lru_cache(maxsize=None)
def _psi_f(x: int, y: int) -> float:
    return float(edge_weight(x, y))


_INNER_CACHE: dict[tuple[int, int, int], Fraction] = {}


def _inner_exact(table: RootedTrees, s: int, i: int) -> Fraction:
    key = (id(table), s, i)
    if key in _INNER_CACHE:
        return _INNER_CACHE[key]
    tot = Fraction(0)
    for (a, b), dc in zip(table.children[s][i], table.child_degs[s][i]):
        tot += _inner_exact(table, a, b) + sum((edge_weight(dc, x) for x in table.child_degs[a][b]),
                                               Fraction(0))
    _INNER_CACHE[key] = tot
    return tot


ROOTED = RootedTrees()


def rooted_tree_graph(s: int, i: int) -> Graph:
    edges: list[tuple[int, int]] = []
    ROOTED.ensure(s)
    ROOTED.attach(edges, 0, s, i, 1)
    return Graph.from_edges(s, edges)


# --- free trees ---------------------------------------------------------------


def enum_trees(n: int, guard_override: bool = False) -> Iterator[Graph]:
    """One tree per isomorphism class on ``n`` vertices, rooted at a centroid."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > GUARDS[0] and not guard_override:
        raise GuardError(f"n={n} exceeds the tree guard {GUARDS[0]}")
    ROOTED.ensure(max(1, n // 2))
    if n == 1:
        yield Graph(1, (frozenset(),))
        return
    # one centroid: every branch has fewer than n/2 vertices
    for kids in ROOTED.child_multisets(n - 1, (n - 1) // 2):
        edges: list[tuple[int, int]] = []
        nxt = 1
        for a, b in kids:
            w = nxt
            edges.append((0, w))
            nxt = ROOTED.attach(edges, w, a, b, nxt + 1)
        yield Graph.from_edges(n, edges)
    # two centroids joined by the middle edge
    if n % 2 == 0:
        h = n // 2
        cnt = ROOTED.count(h)
        for i in range(cnt):
            for j in range(i, cnt):
                edges = [(0, h)]
                ROOTED.attach(edges, 0, h, i, 1)
                ROOTED.attach(edges, h, h, j, h + 1)
                yield Graph.from_edges(n, edges)


# --- base graphs ----------------------------------------------------------------


@dataclass
class BaseGraph:
    graph: Graph
    auts: list[tuple[int, ...]]
    removal_sets: list[int]
    key: bytes
    by_last: list[list[int]] = field(default_factory=list)

    @property
    def m(self) -> int:
        return self.graph.n


def _maximal_induced_subtrees(G: Graph) -> list[int]:
    """Bitmasks of inclusion-maximal vertex sets inducing a tree."""
    masks = G.masks
    n = G.n
    found: set[int] = set()

    def grow(S: int, touch: int, blocked: int, excluded: int) -> None:
        free = touch & ~S & ~blocked & ~excluded
        if not free:
            found.add(S)
            return
        v = (free & -free).bit_length() - 1
        bit = 1 << v
        grow(S | bit, touch | masks[v], blocked | (masks[v] & touch & ~S), excluded)
        grow(S, touch, blocked, excluded | bit)

    for r in range(n):
        grow(1 << r, masks[r], 0, (1 << r) - 1)

    def extendable(S: int) -> bool:
        for v in range(n):
            if not S >> v & 1 and bin(masks[v] & S).count("1") == 1:
                return True
        return False

    return sorted(S for S in found if not extendable(S))


def _make_base(G: Graph) -> BaseGraph:
    full = (1 << G.n) - 1
    removal = sorted({full & ~S for S in _maximal_induced_subtrees(G)})
    by_last: list[list[int]] = [[] for _ in range(G.n)]
    for X in removal:
        by_last[X.bit_length() - 1].append(X)
    return BaseGraph(G, automorphisms(G), removal, canonical_form(G), by_last)


def _kernels(c: int) -> list[tuple[int, tuple[tuple[int, int], ...]]]:
    """Connected multigraphs with loops, minimum degree 3, cyclomatic number c."""
    out = []
    for v in range(1, 2 * (c - 1) + 1):
        e = v + c - 1
        slots = [(i, j) for i in range(v) for j in range(i, v)]
        seen: set[tuple[tuple[int, int], ...]] = set()
        for combo in itertools.combinations_with_replacement(slots, e):
            deg = [0] * v
            for i, j in combo:
                deg[i] += 1
                deg[j] += 1
            if min(deg) < 3:
                continue
            reach = {0}
            grew = True
            while grew:
                grew = False
                for i, j in combo:
                    if (i in reach) != (j in reach):
                        reach |= {i, j}
                        grew = True
            if len(reach) != v:
                continue
            key = min(tuple(sorted(tuple(sorted((p[i], p[j]))) for i, j in combo))
                      for p in itertools.permutations(range(v)))
            if key not in seen:
                seen.add(key)
                out.append((v, key))
    return out


def _subdivisions(v: int, edges: Sequence[tuple[int, int]], extra: int) -> Iterator[Graph]:
    """Simple graphs from a kernel by placing ``extra`` internal vertices on edges."""
    e = len(edges)
    groups: dict[tuple[int, int], list[int]] = {}
    for idx, pair in enumerate(edges):
        groups.setdefault(pair, []).append(idx)

    def fill(idx: int, left: int, lens: list[int]) -> Iterator[list[int]]:
        if idx == e:
            if left == 0:
                yield lens
            return
        pair = edges[idx]
        lo = 2 if pair[0] == pair[1] else 0
        # parallel copies are interchangeable: keep their lengths non-increasing
        hi = left
        if idx > 0 and edges[idx - 1] == pair:
            hi = min(hi, lens[-1])
        for ell in range(lo, hi + 1):
            yield from fill(idx + 1, left - ell, lens + [ell])

    for lens in fill(0, extra, []):
        ok = True
        for pair, members in groups.items():
            if pair[0] != pair[1] and sum(1 for i in members if lens[i] == 0) > 1:
                ok = False
                break
        if not ok:
            continue
        out: list[tuple[int, int]] = []
        nxt = v
        for (a, b), ell in zip(edges, lens):
            prev = a
            for _ in range(ell):
                out.append((prev, nxt))
                prev = nxt
                nxt += 1
            out.append((prev, b))
        yield Graph.from_edges(nxt, out)


_BASE_CACHE: dict[tuple[int, int], list[BaseGraph]] = {}


def base_graphs(c: int, m: int) -> list[BaseGraph]:
    """All base graphs (connected, minimum degree 2) with cyclomatic number c on m vertices."""
    key = (c, m)
    if key in _BASE_CACHE:
        return _BASE_CACHE[key]
    graphs: dict[bytes, Graph] = {}
    if c == 1:
        if m >= 3:
            G = Graph.from_edges(m, [(i, (i + 1) % m) for i in range(m)])
            graphs[canonical_form(G)] = G
    elif c >= 2:
        for v, edges in _kernels(c):
            if m < v:
                continue
            for G in _subdivisions(v, edges, m - v):
                graphs.setdefault(canonical_form(G), G)
    out = [_make_base(graphs[k]) for k in sorted(graphs)]
    _BASE_CACHE[key] = out
    return out


# --- size vectors and assignments ------------------------------------------------


def _is_lexmin(t: Sequence[int], group: Sequence[Sequence[int]]) -> bool:
    t = tuple(t)
    for g in group:
        img = tuple(t[x] for x in g)
        if img < t:
            return False
    return True


def _size_vectors(B: BaseGraph, n: int, k: int | None) -> Iterator[tuple[int, ...]]:
    """Compositions of n over base vertices; with ``k``, only those of apex number k."""
    m = B.m
    t = [0] * m

    def rec(i: int, left: int) -> Iterator[tuple[int, ...]]:
        if i == m - 1:
            choices = [left]
        else:
            choices = range(1, left - (m - 1 - i) + 1)
        for x in choices:
            t[i] = x
            if k is not None:
                bad = False
                for X in B.by_last[i]:
                    if sum(t[j] for j in _bits(X)) < k:
                        bad = True
                        break
                if bad:
                    continue
            if i == m - 1:
                yield tuple(t)
            else:
                yield from rec(i + 1, left - x)

    if n < m:
        return
    for vec in rec(0, n):
        if k is not None and min(sum(vec[j] for j in _bits(X)) for X in B.removal_sets) != k:
            continue
        if _is_lexmin(vec, B.auts):
            yield vec


def apex_of_vector(B: BaseGraph, t: Sequence[int]) -> int:
    return min(sum(t[j] for j in _bits(X)) for X in B.removal_sets)


@dataclass(frozen=True)
class Unit:
    """One (base graph, size vector) block of the stream."""

    base: BaseGraph
    sizes: tuple[int, ...]

    def stabiliser(self) -> list[tuple[int, ...]]:
        ident = tuple(range(self.base.m))
        return [g for g in self.base.auts if g != ident and all(self.sizes[x] == self.sizes[v]
                                                                 for v, x in enumerate(g))]

    def assignments(self) -> Iterator[tuple[int, ...]]:
        stab = self.stabiliser()
        ranges = [range(ROOTED.count(s)) for s in self.sizes]
        for a in itertools.product(*ranges):
            if stab and not _is_lexmin(a, stab):
                continue
            yield a

    def materialize(self, a: Sequence[int]) -> Graph:
        B = self.base.graph
        edges = list(B.edges)
        nxt = B.n
        for v, (s, i) in enumerate(zip(self.sizes, a)):
            nxt = ROOTED.attach(edges, v, s, i, nxt)
        return Graph.from_edges(nxt, edges)


def enum_units(scope: EnumScope) -> Iterator[Unit]:
    """Shard-local (base graph, size vector) blocks of a cyclic scope."""
    if scope.c == 0:
        raise ValueError("units are defined for cyclic scopes only")
    idx, total = scope.shard
    counter = 0
    for m in range(3 if scope.c == 1 else 1, scope.n + 1):
        for B in base_graphs(scope.c, m):
            for t in _size_vectors(B, scope.n, scope.k):
                if counter % total == idx:
                    yield Unit(B, t)
                counter += 1


def enum_ccyclic(n: int, c: int, shard: tuple[int, int] = (0, 1),
                 guard_override: bool = False) -> Iterator[Graph]:
    """One connected graph per isomorphism class with n vertices and n+c-1 edges."""
    scope = EnumScope(n, c, None, shard, guard_override)
    yield from _stream(scope)


def enum_kapex(n: int, c: int, k: int, shard: tuple[int, int] = (0, 1),
               guard_override: bool = False) -> Iterator[Graph]:
    """The c-cyclic graphs on n vertices whose apex number is exactly k."""
    scope = EnumScope(n, c, k, shard, guard_override)
    yield from _stream(scope)


def _stream(scope: EnumScope) -> Iterator[Graph]:
    if scope.c == 0:
        if scope.k not in (None, 0):
            return
        idx, total = scope.shard
        for i, T in enumerate(enum_trees(scope.n, scope.guard_override)):
            if i % total == idx:
                yield T
        return
    for unit in enum_units(scope):
        for a in unit.assignments():
            yield unit.materialize(a)


def count_graphs(scope: EnumScope) -> int:
    if scope.c == 0:
        return sum(1 for _ in _stream(scope))
    return sum(sum(1 for _ in u.assignments()) for u in enum_units(scope))
