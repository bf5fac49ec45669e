"""Apex number: the fewest vertices whose removal leaves a tree.

Removing X leaves a tree exactly when the remaining vertices induce a subtree,
so the apex number is n minus the largest induced subtree.  A largest induced
subtree of a cyclic graph consists of whole hanging trees over an induced
subtree of the base graph, so the search runs on the (much smaller) base graph
with hanging-tree sizes as vertex weights.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import (Graph, GraphError, base_graph, hanging_roots, induced_subgraph,
                    is_tree, require_connected)

APEX_GUARD = 24


@dataclass(frozen=True)
class ApexCertificate:
    k: int
    quasi_set: tuple[int, ...]
    witness: Graph

    def check(self, G: Graph) -> bool:
        """True iff removing ``quasi_set`` from ``G`` leaves ``witness``, a tree."""
        keep = [v for v in range(G.n) if v not in set(self.quasi_set)]
        sub, _ = induced_subgraph(G, keep)
        return len(self.quasi_set) == self.k and sub == self.witness and is_tree(sub)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def max_weight_induced_trees(G: Graph, weights: Sequence[int] | None = None,
                             collect: bool = False) -> tuple[int, list[int]]:
    """Maximum total weight of a vertex set inducing a tree.

    Returns ``(best, sets)`` where ``sets`` holds bitmasks of optimal sets: one
    of them, or all of them when ``collect`` is true.  Weights must be positive.
    """
    n = G.n
    if n == 0:
        return 0, [0]
    w = list(weights) if weights is not None else [1] * n
    if any(x <= 0 for x in w):
        raise ValueError("weights must be positive")
    masks = G.masks
    best = [0]
    found: list[int] = []

    def weight_of(mask: int) -> int:
        return sum(w[v] for v in _bits(mask))

    def reach_weight(S: int, allowed: int) -> int:
        reach = 0
        layer = S
        while layer:
            nb = 0
            for v in _bits(layer):
                nb |= masks[v]
            layer = nb & allowed & ~reach
            reach |= layer
        return weight_of(reach)

    def grow(S: int, ws: int, touch: int, blocked: int, excluded: int) -> None:
        free = touch & ~S & ~blocked & ~excluded
        if not free:
            if ws > best[0]:
                best[0] = ws
                found.clear()
                found.append(S)
            elif collect and ws == best[0]:
                found.append(S)
            return
        allowed = ~(S | blocked | excluded) & full
        bound = ws + reach_weight(S, allowed)
        if bound < best[0] or (not collect and bound == best[0]):
            return
        # branch on the free vertex with the most allowed neighbours
        v = max(_bits(free), key=lambda x: (bin(masks[x] & allowed).count("1"), -x))
        bit = 1 << v
        new_blocked = blocked | (masks[v] & touch & ~S)
        grow(S | bit, ws + w[v], touch | masks[v], new_blocked, excluded)
        grow(S, ws, touch, blocked, excluded | bit)

    full = (1 << n) - 1
    for r in range(n):
        below = (1 << r) - 1
        grow(1 << r, w[r], masks[r], 0, below)
    return best[0], found


@dataclass(frozen=True)
class _Reduction:
    base: Graph
    mapping: list[int]
    weights: list[int]
    members: list[list[int]]


def _reduce(G: Graph) -> _Reduction:
    B, mapping = base_graph(G)
    root = hanging_roots(G)
    index = {v: i for i, v in enumerate(mapping)}
    members: list[list[int]] = [[] for _ in mapping]
    for v in range(G.n):
        members[index[root[v]]].append(v)
    return _Reduction(B, mapping, [len(m) for m in members], members)


def max_induced_tree_order(G: Graph, reduce: bool = True) -> int:
    """Order of a largest induced subtree; ``reduce=False`` searches G directly."""
    require_connected(G)
    if is_tree(G):
        return G.n
    if not reduce:
        return max_weight_induced_trees(G)[0]
    red = _reduce(G)
    return max_weight_induced_trees(red.base, red.weights)[0]


def _quasi_sets(G: Graph) -> tuple[int, list[tuple[int, ...]]]:
    require_connected(G)
    if is_tree(G):
        return 0, [()]
    red = _reduce(G)
    best, sets = max_weight_induced_trees(red.base, red.weights, collect=True)
    out = []
    for S in sets:
        keep = set()
        for i in _bits(S):
            keep.update(red.members[i])
        out.append(tuple(v for v in range(G.n) if v not in keep))
    return G.n - best, sorted(set(out))


def apex_number(G: Graph) -> ApexCertificate:
    """Apex number with the lexicographically smallest optimal removal set.

    Trees get k = 0.
    """
    k, sets = _quasi_sets(G)
    quasi = sets[0]
    gone = set(quasi)
    witness, _ = induced_subgraph(G, [v for v in range(G.n) if v not in gone])
    return ApexCertificate(k, quasi, witness)


def apex_value(G: Graph, reduce: bool = True) -> int:
    """Apex number only (skips certificate construction)."""
    return G.n - max_induced_tree_order(G, reduce)


def unicyclic_apex(G: Graph) -> int:
    """Smallest hanging tree over the cycle of a unicyclic graph."""
    require_connected(G)
    if G.m != G.n:
        raise GraphError("graph is not unicyclic")
    root = hanging_roots(G)
    sizes: dict[int, int] = {}
    for r in root:
        sizes[r] = sizes.get(r, 0) + 1
    return min(sizes.values())


def is_k_apex(G: Graph, k: int) -> bool:
    if k < 1:
        raise ValueError("k must be at least 1")
    return apex_value(G) == k


def all_quasi_sets(G: Graph, k: int, guard: int = APEX_GUARD) -> list[tuple[int, ...]]:
    """Every size-k removal set leaving a tree; ``k`` must be the apex number."""
    if G.n > guard:
        raise GraphError(f"n={G.n} exceeds the exhaustion guard {guard}")
    actual, sets = _quasi_sets(G)
    if k != actual:
        raise ValueError(f"k={k} is not the apex number ({actual})")
    return sets


def certificate_json(cert: ApexCertificate) -> dict:
    from .graph6 import to_graph6

    return {"k": cert.k, "quasi_set": list(cert.quasi_set), "witness_graph6": to_graph6(cert.witness)}
