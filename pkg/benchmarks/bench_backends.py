#!/usr/bin/env python3
"""Compare the compiled kernels against the pure-Python fallback.

Times k-clique counting/listing and both percolation loops on two synthetic
families (a sparse random graph and a chain of overlapping dense blocks),
then runs a union-find workload sanity check: total parent-pointer
traversals should grow close to linearly with the number of operations.

Usage: python benchmarks/bench_backends.py [--scale SCALE]
"""

import argparse
import random
import time
from itertools import combinations

import numpy as np

from cliqueperc import Graph, UnionFind, build_dag, degeneracy_ordering
from cliqueperc import _kernels_py as pure

try:
    from cliqueperc import _kernels as compiled
except ImportError:
    compiled = None


def er_graph(n, avg_deg, seed):
    rng = np.random.default_rng(seed)
    p = avg_deg / (n - 1)
    edges = []
    for u in range(n):
        nbrs = np.nonzero(rng.random(n - u - 1) < p)[0]
        edges.extend((u, u + 1 + int(v)) for v in nbrs)
    return Graph.from_edges(edges)


def block_chain_graph(blocks, size):
    edges = []
    for b in range(blocks):
        base = b * (size - 1)
        edges += list(combinations(range(base, base + size), 2))
    return Graph.from_edges(edges)


def timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def bench_row(name, run_pure, run_compiled):
    res_p, t_p = timed(run_pure)
    if compiled is None:
        print(f"{name:<34} pure {t_p:8.3f}s   (compiled kernels unavailable)")
        return
    res_c, t_c = timed(run_compiled)
    assert res_p == res_c, f"{name}: backend results diverge"
    speedup = t_p / t_c if t_c > 0 else float("inf")
    print(f"{name:<34} pure {t_p:8.3f}s   compiled {t_c:8.3f}s   x{speedup:.1f}")


def clique_benches(scale):
    g = er_graph(1500 * scale, 40, seed=1)
    d = build_dag(g, degeneracy_ordering(g))
    print(f"\nsparse random graph: n={g.n} m={g.m} core={d.core}")
    for k in (3, 4):
        args = (d.n, d.indptr, d.indices, k)
        bench_row(f"  count k={k}", lambda a=args: pure.count_cliques(*a),
                  lambda a=args: compiled.count_cliques(*a))
    args = (d.n, d.indptr, d.indices, d.order, 3)
    bench_row("  list k=3",
              lambda: sum(1 for _ in pure.iter_cliques(*args)),
              lambda: sum(1 for _ in compiled.iter_cliques(*args)))
    return d


def percolation_benches(scale, d_sparse):
    k = 3
    cliques = list(pure.iter_cliques(d_sparse.n, d_sparse.indptr,
                                     d_sparse.indices, d_sparse.order, k))
    print(f"\npercolation over the sparse graph: n_{k}={len(cliques)}")
    bench_row(f"  cpm k={k}",
              lambda: pure.cpm_run(iter(cliques), k)[2],
              lambda: compiled.cpm_run(iter(cliques), k)[2])

    g = block_chain_graph(8 * scale, 12)
    d = build_dag(g, degeneracy_ordering(g))
    k, z = 8, 2
    cliques = list(pure.iter_cliques(d.n, d.indptr, d.indices, d.order, k))
    print(f"\noverlapping dense blocks: n={g.n} m={g.m} n_{k}={len(cliques)}")
    bench_row(f"  cpm k={k}",
              lambda: pure.cpm_run(iter(cliques), k)[2],
              lambda: compiled.cpm_run(iter(cliques), k)[2])
    bench_row(f"  cpmz k={k} z={z}",
              lambda: pure.cpmz_run(iter(cliques), k, z)[2],
              lambda: compiled.cpmz_run(iter(cliques), k, z)[2])
    bench_row(f"  cpmz k={k} z={z} strict",
              lambda: pure.cpmz_run(iter(cliques), k, z, True)[2],
              lambda: compiled.cpmz_run(iter(cliques), k, z, True)[2])


class CountingUnionFind(UnionFind):
    """find() instrumented to count parent-pointer traversals."""

    hops = 0

    def find(self, p):
        parent = self.parent
        root = p
        while parent[root] != root:
            root = parent[root]
            CountingUnionFind.hops += 1
        while parent[p] != root:
            parent[p], p = root, parent[p]
        return root


def unionfind_scaling():
    print("\nunion-find workload (total parent traversals vs operation count):")
    prev = None
    for n_ops in (100_000, 200_000, 400_000):
        rng = random.Random(9)
        uf = CountingUnionFind()
        CountingUnionFind.hops = 0
        for _ in range(n_ops):
            r = rng.random()
            if r < 0.3 or uf.count_nodes < 2:
                uf.make_set()
            elif r < 0.6:
                a = uf.find(rng.randrange(uf.count_nodes))
                b = uf.find(rng.randrange(uf.count_nodes))
                uf.union({a, b})
            else:
                uf.find(rng.randrange(uf.count_nodes))
        ratio = "" if prev is None else f"   x{CountingUnionFind.hops / prev:.2f} for x2 ops"
        print(f"  {n_ops:>8} ops -> {CountingUnionFind.hops:>9} traversals{ratio}")
        prev = CountingUnionFind.hops


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--scale", type=int, default=1,
                    help="multiplier for problem sizes (default 1)")
    args = ap.parse_args()
    if compiled is None:
        print("note: compiled kernels not built; timing the fallback only")
    d = clique_benches(args.scale)
    percolation_benches(args.scale, d)
    unionfind_scaling()


if __name__ == "__main__":
    main()
