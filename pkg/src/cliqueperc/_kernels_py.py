"""Pure-Python kernels: clique listing over the oriented DAG and the two
percolation loops.

This module is the fallback backend; `cliqueperc._kernels` is the compiled
twin with identical semantics, emission order, and counters. Keep the two in
lockstep: the cross-backend tests assert equality of everything they return.
"""

from __future__ import annotations

from itertools import combinations

from .errors import MemoryBudgetError
from .unionfind import UnionFind

__all__ = ["count_cliques", "iter_cliques", "cpm_run", "cpmz_run"]

_EMPTY: frozenset = frozenset()


def _aslist(a):
    return a if isinstance(a, list) else list(a)


def _merge(cand, start, idx, lo, hi):
    # intersection of two rank-sorted runs: cand[start:] and idx[lo:hi]
    out = []
    i, j = start, lo
    n1 = len(cand)
    while i < n1 and j < hi:
        x, y = cand[i], idx[j]
        if x < y:
            i += 1
        elif x > y:
            j += 1
        else:
            out.append(x)
            i += 1
            j += 1
    return out


def count_cliques(n, indptr, indices, k: int) -> int:
    """Number of k-cliques in the DAG given as a rank-space CSR."""
    if k < 2:
        raise ValueError("k must be >= 2")
    iptr = _aslist(indptr)
    idx = _aslist(indices)
    if k == 2:
        return iptr[n]

    def rec(cand, need):
        if need == 1:
            return len(cand)
        total = 0
        for i, u in enumerate(cand):
            nxt = _merge(cand, i + 1, idx, iptr[u], iptr[u + 1])
            if len(nxt) >= need - 1:
                total += rec(nxt, need - 1)
        return total

    total = 0
    for r in range(n):
        lo, hi = iptr[r], iptr[r + 1]
        if hi - lo >= k - 1:
            total += rec(idx[lo:hi], k - 1)
    return total


def iter_cliques(n, indptr, indices, order, k: int):
    """Yield every k-clique once as a sorted tuple of internal ids.

    Vertices are expanded in peeling-rank order at every level, so the
    emission sequence is a fixed function of the DAG.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    iptr = _aslist(indptr)
    idx = _aslist(indices)
    ids = _aslist(order)

    def rec(cand, need, pref):
        if need == 1:
            for u in cand:
                key = pref + [ids[u]]
                key.sort()
                yield tuple(key)
            return
        for i, u in enumerate(cand):
            nxt = _merge(cand, i + 1, idx, iptr[u], iptr[u + 1])
            if len(nxt) >= need - 1:
                yield from rec(nxt, need - 1, pref + [ids[u]])

    for r in range(n):
        lo, hi = iptr[r], iptr[r + 1]
        if hi - lo >= k - 1:
            yield from rec(idx[lo:hi], k - 1, [ids[r]])


def _check_clique(ck, k: int):
    if len(ck) != k:
        raise ValueError(f"expected a {k}-clique key, got {ck!r}")
    for i in range(k - 1):
        if ck[i] >= ck[i + 1]:
            raise ValueError(f"clique key not strictly increasing: {ck!r}")


def _check_budget(n_keys, budget_bytes, width):
    if budget_bytes is not None and n_keys * width * 4 > budget_bytes:
        raise MemoryBudgetError(n_keys, n_keys * width * 4, budget_bytes)


def cpm_run(cliques, k: int, key_budget_bytes=None):
    """Exact percolation: one union-find node per (k-1)-clique seen.

    Returns (uf, membership, counters) where membership maps each
    (k-1)-clique key to its union-find node.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    uf = UnionFind()
    membership: dict[tuple, int] = {}
    n_k = 0
    for ck in cliques:
        _check_clique(ck, k)
        n_k += 1
        to_merge = set()
        for sub in combinations(ck, k - 1):
            node = membership.get(sub)
            if node is None:
                node = uf.make_set()
                membership[sub] = node
                _check_budget(len(membership), key_budget_bytes, k - 1)
            else:
                node = uf.find(node)
            to_merge.add(node)
        uf.union(to_merge)
    counters = {
        "n_k": n_k,
        "peak_keys": len(membership),  # keys are never removed
        "line8_execs": 0,
        "setz_size_sum": 0,
        "setz_max": 0,
    }
    return uf, membership, counters


def cpmz_run(cliques, k: int, z: int, strict=False, key_budget_bytes=None):
    """Relaxed percolation: a (k-1)-clique is identified with the set of its
    z-sub-cliques, and its community is any union-find set containing all of
    them.

    Each z-clique key maps to the set of union-find nodes it has been added
    to. Before every use that set is reduced to roots; the sizes seen at the
    reductions feed the setz_* counters. With ``strict`` the reduction runs
    on every (clique, sub-clique, z-clique) triplet even after the running
    intersection is empty; otherwise the intersection short-circuits. Both
    modes produce identical communities.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    if not 2 <= z <= k - 2:
        raise ValueError(f"z must be in [2, k-2]; got z={z}, k={k}")
    uf = UnionFind()
    parent = uf.parent
    zsets: dict[tuple, set[int]] = {}
    n_k = 0
    line8 = 0
    size_sum = 0
    size_max = 0
    for ck in cliques:
        _check_clique(ck, k)
        n_k += 1
        to_merge = set()
        for sub in combinations(ck, k - 1):
            common = None
            for cz in combinations(sub, z):
                if common is not None and not common and not strict:
                    break
                line8 += 1
                cur = zsets.get(cz)
                if cur is None:
                    reduced = _EMPTY
                else:
                    size = len(cur)
                    size_sum += size
                    if size > size_max:
                        size_max = size
                    reduced = {uf.find(p) for p in cur}
                    assert all(parent[x] == x for x in reduced)
                    zsets[cz] = reduced
                if common is None:
                    common = set(reduced)
                else:
                    common &= reduced
            if common:
                to_merge |= common
        if to_merge:
            q = uf.union(to_merge)
        else:
            q = uf.make_set()
        for cz in combinations(ck, z):
            cur = zsets.get(cz)
            if cur is None:
                zsets[cz] = {q}
                _check_budget(len(zsets), key_budget_bytes, z)
            else:
                cur.add(q)
    counters = {
        "n_k": n_k,
        "peak_keys": len(zsets),  # keys are never removed
        "line8_execs": line8,
        "setz_size_sum": size_sum,
        "setz_max": size_max,
    }
    return uf, zsets, counters
