"""The two percolation algorithms over a streamed k-clique source.

`run_cpm` keeps one union-find node per (k-1)-clique and merges the nodes of
the k sub-cliques of every incoming k-clique; the final union-find sets are
exactly the percolation communities.

`run_cpmz` trades accuracy for memory: it only keys state by z-cliques
(2 <= z <= k-2). A (k-1)-clique is treated as present in every union-find
set shared by all of its z-sub-cliques, which can over-merge: a (k-1)-clique
whose z-sub-cliques all arrived through other cliques is indistinguishable
from one that was actually seen. Communities therefore come out as unions of
one or more exact communities, never splits, and the outcome depends on the
order of the clique stream.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterable, Optional

from ._backend import kernels
from .unionfind import UnionFind

__all__ = ["RunStats", "PercResult", "run_cpm", "run_cpmz"]

_ID_BYTES = 4  # dense internal ids, stored as 32-bit integers


@dataclass(frozen=True)
class RunStats:
    """Counter snapshot taken when a run finishes.

    setz_mean/setz_max summarize the sizes of the per-z-clique node sets
    sampled just before each root reduction (0 for exact runs); peak_keys is
    the largest number of map entries ever held.
    """

    n_k: int
    finds: int
    unions: int
    makesets: int
    peak_keys: int
    line8_execs: int
    setz_mean: float
    setz_max: int
    wall_time: float


@dataclass(frozen=True)
class PercResult:
    """A finished percolation run.

    `membership` maps (k-1)-clique keys to union-find nodes in cpm mode and
    z-clique keys to sets of union-find nodes in cpmz mode.
    """

    uf: UnionFind
    membership: dict
    mode: str  # "cpm" | "cpmz"
    k: int
    z: Optional[int]
    stats: RunStats

    @property
    def key_width(self) -> int:
        return self.k - 1 if self.mode == "cpm" else self.z

    @property
    def key_bytes_estimate(self) -> int:
        return self.stats.peak_keys * self.key_width * _ID_BYTES


def run_cpm(clique_stream: Iterable[tuple], k: int, *,
            key_budget_bytes: Optional[int] = None) -> PercResult:
    """Exact percolation over a stream of canonical k-clique keys.

    Duplicate cliques in the stream are harmless (their sub-clique sets are
    already merged). Raises MemoryBudgetError when the estimated key storage
    would exceed `key_budget_bytes`.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    t0 = time.perf_counter()
    uf, membership, c = kernels.cpm_run(clique_stream, k, key_budget_bytes)
    wall = time.perf_counter() - t0
    stats = RunStats(
        n_k=c["n_k"], finds=uf.n_finds, unions=uf.n_unions,
        makesets=uf.count_nodes, peak_keys=c["peak_keys"],
        line8_execs=0, setz_mean=0.0, setz_max=0, wall_time=wall,
    )
    return PercResult(uf=uf, membership=membership, mode="cpm", k=k, z=None, stats=stats)


def run_cpmz(clique_stream: Iterable[tuple], k: int, z: int, *,
             strict_reduce: bool = False,
             key_budget_bytes: Optional[int] = None) -> PercResult:
    """Relaxed percolation keyed by z-cliques.

    z must lie in [2, k-2]; z = k-1 would coincide with the exact algorithm
    and is rejected. With `strict_reduce` the root reduction runs on every
    (clique, sub-clique, z-clique) triplet, which makes line8_execs exactly
    n_k * k * C(k-1, z); the default short-circuits empty intersections.
    Communities are identical in both modes.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    if not 2 <= z <= k - 2:
        raise ValueError(f"z must be in [2, k-2]; got z={z}, k={k}")
    t0 = time.perf_counter()
    uf, membership, c = kernels.cpmz_run(clique_stream, k, z, strict_reduce,
                                         key_budget_bytes)
    wall = time.perf_counter() - t0
    line8 = c["line8_execs"]
    stats = RunStats(
        n_k=c["n_k"], finds=uf.n_finds, unions=uf.n_unions,
        makesets=uf.count_nodes, peak_keys=c["peak_keys"],
        line8_execs=line8,
        setz_mean=(c["setz_size_sum"] / line8) if line8 else 0.0,
        setz_max=c["setz_max"], wall_time=wall,
    )
    return PercResult(uf=uf, membership=membership, mode="cpmz", k=k, z=z, stats=stats)
