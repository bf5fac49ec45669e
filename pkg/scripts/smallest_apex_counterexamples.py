"""Smallest graphs where deleting a cycle 2-vertex (or one of its cycle edges)
does not lower the apex number as expected.

For every enumerated graph with apex number k >= 2 and every degree-2 vertex
u0 on a cycle, checks apex(G - u0) == k - 1 and apex(G - u0v0) in {k-1, k}.
Prints the first failure of each kind by order, then per-order counts.
"""

import argparse
from dataclasses import dataclass

from kapex.apex import apex_value
from kapex.enumeration import enum_ccyclic
from kapex.graph import chordless_cycles, is_connected, remove_edge, remove_vertices
from kapex.graph6 import to_graph6


@dataclass
class Config:
    n_max: int = 9
    c_max: int = 3


def _cycle_neighbours(G, u):
    return sorted({w for cyc in chordless_cycles(G) if u in cyc for w in G.adj[u] if w in cyc})


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n-max", type=int, default=Config.n_max)
    p.add_argument("--c-max", type=int, default=Config.c_max)
    args = p.parse_args()
    cfg = Config(args.n_max, args.c_max)
    first = {}
    for n in range(4, cfg.n_max + 1):
        counts = {"vertex": 0, "edge": 0, "instances": 0}
        for c in range(1, cfg.c_max + 1):
            for G in enum_ccyclic(n, c):
                k = apex_value(G)
                if k < 2:
                    continue
                for u in range(n):
                    if G.degrees[u] != 2:
                        continue
                    nbrs = _cycle_neighbours(G, u)
                    if not nbrs:
                        continue
                    counts["instances"] += 1
                    H = remove_vertices(G, [u])
                    if is_connected(H) and apex_value(H) != k - 1:
                        counts["vertex"] += 1
                        first.setdefault("vertex", (to_graph6(G), k, u, apex_value(H)))
                    for v in nbrs:
                        r = apex_value(remove_edge(G, u, v))
                        if r not in (k - 1, k):
                            counts["edge"] += 1
                            first.setdefault("edge", (to_graph6(G), k, (u, v), r))
        print(f"n={n}: {counts}")
    for kind, (g6, k, where, got) in first.items():
        print(f"first {kind} failure: {g6} k={k} at {where} -> apex {got}")


if __name__ == "__main__":
    main()
