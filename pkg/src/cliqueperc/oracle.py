"""Brute-force reference: communities by literal application of the
definitions. Testing aid only; exponential in the graph size."""

from __future__ import annotations

from itertools import combinations

from .cover import Cover
from .graph import Graph

__all__ = ["brute_force_cpm"]


def brute_force_cpm(g: Graph, k: int) -> Cover:
    """Enumerate every k-subset, keep the fully connected ones, link two
    cliques when they share exactly k-1 vertices, and return the node sets
    of the connected clique families (external ids)."""
    if k < 2:
        raise ValueError("k must be >= 2")
    n = g.n
    masks = [0] * n
    for u in range(n):
        for v in g.neighbors(u):
            masks[u] |= 1 << int(v)

    cliques = []
    for sub in combinations(range(n), k):
        ok = True
        for i in range(k - 1):
            mi = masks[sub[i]]
            for j in range(i + 1, k):
                if not (mi >> sub[j]) & 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            cliques.append(frozenset(sub))

    # connected components of the clique-adjacency graph
    parent = list(range(len(cliques)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(cliques)):
        for j in range(i + 1, len(cliques)):
            if len(cliques[i] & cliques[j]) == k - 1:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[rj] = ri

    groups: dict[int, set[int]] = {}
    for i, c in enumerate(cliques):
        groups.setdefault(find(i), set()).update(c)
    ext = g.ext_ids
    return Cover.from_sets({int(ext[v]) for v in c} for c in groups.values())
