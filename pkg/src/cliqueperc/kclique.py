"""Stream every k-clique of a graph exactly once, in a fixed order."""

from __future__ import annotations

from itertools import combinations
from typing import Callable, Iterator

from ._backend import kernels
from .graph import Dag, Graph, build_dag, degeneracy_ordering

__all__ = [
    "iter_kcliques",
    "enumerate_kcliques",
    "enumerate_subcliques",
    "count_kcliques",
]

CliqueKey = tuple  # strictly increasing internal vertex ids


def iter_kcliques(d: Dag, k: int) -> Iterator[CliqueKey]:
    """Iterate the k-cliques of the DAG's underlying graph as canonical keys.

    Each clique appears exactly once; the order is a deterministic function
    of the graph and the peeling tie-break rule.
    """
    return kernels.iter_cliques(d.n, d.indptr, d.indices, d.order, k)


def enumerate_kcliques(d: Dag, k: int, emit: Callable[[CliqueKey], None]) -> int:
    """Feed every k-clique to `emit`; returns the number of emissions."""
    n = 0
    for c in iter_kcliques(d, k):
        emit(c)
        n += 1
    return n


def enumerate_subcliques(c: CliqueKey, r: int, emit: Callable[[CliqueKey], None]) -> None:
    """Emit all r-subsets of clique key `c` in lexicographic order."""
    if not 2 <= r < len(c):
        raise ValueError(f"r must be in [2, {len(c) - 1}]; got {r}")
    for sub in combinations(c, r):
        emit(sub)


def count_kcliques(g: Graph, k: int) -> int:
    """Number of k-cliques of g (no clique keys are materialized)."""
    d = build_dag(g, degeneracy_ordering(g))
    return kernels.count_cliques(d.n, d.indptr, d.indices, k)
