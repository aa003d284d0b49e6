"""Overlapping community detection by clique percolation.

Exact communities from streamed k-cliques plus a memory-lean relaxation that
keys its state by z-cliques, with a brute-force oracle, an overlapping-cover
similarity score, and per-run instrumentation.
"""

__version__ = "0.1.0"

from ._backend import BACKEND
from .cover import Cover, extract, read_cover, write_cover
from .errors import MemoryBudgetError, ParseError
from .graph import (CoreOrdering, Dag, Graph, GraphParseError, build_dag,
                    degeneracy_ordering, load_edgelist, write_edgelist)
from .kclique import (count_kcliques, enumerate_kcliques, enumerate_subcliques,
                      iter_kcliques)
from .onmi import onmi
from .oracle import brute_force_cpm
from .percolation import PercResult, RunStats, run_cpm, run_cpmz
from .stats import report
from .unionfind import UnionFind

__all__ = [
    "BACKEND",
    "Cover",
    "CoreOrdering",
    "Dag",
    "Graph",
    "GraphParseError",
    "MemoryBudgetError",
    "ParseError",
    "PercResult",
    "RunStats",
    "UnionFind",
    "brute_force_cpm",
    "build_dag",
    "count_kcliques",
    "degeneracy_ordering",
    "enumerate_kcliques",
    "enumerate_subcliques",
    "extract",
    "iter_kcliques",
    "load_edgelist",
    "onmi",
    "read_cover",
    "report",
    "run_cpm",
    "run_cpmz",
    "write_cover",
    "write_edgelist",
]
