"""Undirected graph container, edge-list I/O, peeling order, and the
low-to-high oriented DAG the clique lister runs on."""

from __future__ import annotations

import heapq
import os
from dataclasses import dataclass, field

import numpy as np

from .errors import ParseError

__all__ = [
    "Graph",
    "CoreOrdering",
    "Dag",
    "GraphParseError",
    "load_edgelist",
    "write_edgelist",
    "degeneracy_ordering",
    "build_dag",
]


class GraphParseError(ParseError):
    """Malformed edge-list input; carries the 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph in CSR form over dense internal ids 0..n-1.

    `ext_ids[i]` is the external label of internal vertex i (assigned by
    first appearance); neighbor lists are strictly increasing and symmetric,
    so ``indices`` has length 2*m.
    """

    n: int
    m: int
    indptr: np.ndarray   # int64, shape (n+1,)
    indices: np.ndarray  # int32, shape (2m,)
    ext_ids: np.ndarray  # int64, shape (n,)
    label_map: dict[int, int] = field(repr=False)  # external id -> internal id

    def neighbors(self, u: int) -> np.ndarray:
        return self.indices[self.indptr[u]:self.indptr[u + 1]]

    def degree(self, u: int) -> int:
        return int(self.indptr[u + 1] - self.indptr[u])

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self.neighbors(u)
        i = np.searchsorted(nbrs, v)
        return i < len(nbrs) and nbrs[i] == v

    def edges(self):
        """Yield each undirected edge once as an internal (u, v) pair, u < v,
        in lexicographic order."""
        for u in range(self.n):
            for v in self.neighbors(u):
                if v > u:
                    yield u, int(v)

    @classmethod
    def from_edges(cls, pairs) -> "Graph":
        """Build from an iterable of (u, v) external-id pairs.

        Self-loops are dropped, duplicates (in either orientation) collapsed,
        and external ids remapped densely by first appearance.
        """
        label_map: dict[int, int] = {}
        ext: list[int] = []
        edges: list[tuple[int, int]] = []
        for a, b in pairs:
            a, b = int(a), int(b)
            for x in (a, b):
                if x not in label_map:
                    label_map[x] = len(ext)
                    ext.append(x)
            if a == b:
                continue
            ia, ib = label_map[a], label_map[b]
            edges.append((ia, ib) if ia < ib else (ib, ia))
        return cls._from_internal(edges, ext, label_map)

    @classmethod
    def _from_internal(cls, edges, ext, label_map) -> "Graph":
        n = len(ext)
        if not edges:
            return cls(n=n, m=0,
                       indptr=np.zeros(n + 1, dtype=np.int64),
                       indices=np.zeros(0, dtype=np.int32),
                       ext_ids=np.asarray(ext, dtype=np.int64),
                       label_map=label_map)
        arr = np.asarray(edges, dtype=np.int64)
        # dedup on the canonical (min, max) orientation
        packed = arr[:, 0] * n + arr[:, 1]
        packed = np.unique(packed)
        us = (packed // n).astype(np.int64)
        vs = (packed % n).astype(np.int64)
        m = len(packed)
        src = np.concatenate([us, vs])
        dst = np.concatenate([vs, us])
        order = np.lexsort((dst, src))
        src, dst = src[order], dst[order]
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.add.at(indptr, src + 1, 1)
        np.cumsum(indptr, out=indptr)
        return cls(n=n, m=m, indptr=indptr,
                   indices=dst.astype(np.int32),
                   ext_ids=np.asarray(ext, dtype=np.int64),
                   label_map=label_map)


def load_edgelist(source) -> Graph:
    """Parse an edge-list stream into a Graph.

    `source` may be a path, a text stream, or a binary stream. Each data line
    holds two non-negative integer tokens; lines starting with '#' or '%' are
    comments; blank lines are allowed. Self-loops are dropped and duplicate
    edges collapsed. Empty input yields the empty graph.
    """
    if isinstance(source, (str, bytes, os.PathLike)) and not hasattr(source, "read"):
        with open(source, "rb") as fh:
            return _parse_lines(fh)
    return _parse_lines(source)


def _parse_lines(stream) -> Graph:
    label_map: dict[int, int] = {}
    ext: list[int] = []
    edges: list[tuple[int, int]] = []
    for line_no, raw in enumerate(stream, start=1):
        if isinstance(raw, bytes):
            raw = raw.decode("utf-8", errors="replace")
        line = raw.strip()
        if not line or line[0] in "#%":
            continue
        toks = line.split()
        if len(toks) != 2:
            raise GraphParseError(line_no, f"expected two tokens, got {len(toks)}")
        try:
            a, b = int(toks[0]), int(toks[1])
        except ValueError:
            raise GraphParseError(line_no, f"non-integer token in {line!r}") from None
        if a < 0 or b < 0:
            raise GraphParseError(line_no, "negative vertex id")
        for x in (a, b):
            if x not in label_map:
                label_map[x] = len(ext)
                ext.append(x)
        if a == b:
            continue
        ia, ib = label_map[a], label_map[b]
        edges.append((ia, ib) if ia < ib else (ib, ia))
    return Graph._from_internal(edges, ext, label_map)


def write_edgelist(g: Graph, sink) -> None:
    """Write one "u v" line per undirected edge, external ids, edges ordered
    by the internal (u, v) pair."""
    own = False
    if isinstance(sink, (str, bytes, os.PathLike)) and not hasattr(sink, "write"):
        sink = open(sink, "w")
        own = True
    try:
        ext = g.ext_ids
        for u, v in g.edges():
            sink.write(f"{ext[u]} {ext[v]}\n")
    finally:
        if own:
            sink.close()


@dataclass(frozen=True)
class CoreOrdering:
    """Peeling order by repeated minimum remaining degree.

    `order[i]` is the internal id removed at step i, `rank` its inverse, and
    `core` the maximum remaining degree observed at any removal.
    """

    order: np.ndarray  # int32, shape (n,)
    rank: np.ndarray   # int32, shape (n,)
    core: int


def degeneracy_ordering(g: Graph) -> CoreOrdering:
    """Peel vertices by minimum remaining degree, smallest id on ties."""
    n = g.n
    deg = [g.degree(u) for u in range(n)]
    # lazy heap: stale (deg, u) entries are skipped when popped
    heap = [(deg[u], u) for u in range(n)]
    heapq.heapify(heap)
    removed = [False] * n
    order = np.empty(n, dtype=np.int32)
    rank = np.empty(n, dtype=np.int32)
    indptr, indices = g.indptr, g.indices
    core = 0
    for step in range(n):
        while True:
            d, u = heapq.heappop(heap)
            if not removed[u] and d == deg[u]:
                break
        removed[u] = True
        if d > core:
            core = d
        order[step] = u
        rank[u] = step
        for j in range(indptr[u], indptr[u + 1]):
            v = int(indices[j])
            if not removed[v]:
                deg[v] -= 1
                heapq.heappush(heap, (deg[v], v))
    return CoreOrdering(order=order, rank=rank, core=core)


@dataclass(frozen=True)
class Dag:
    """Each edge oriented from lower to higher peeling rank.

    Stored in rank space: vertex i here is the i-th vertex of the peeling
    order, and `indices` targets are ranks too, ascending within each list.
    Out-degrees are bounded by the core value.
    """

    n: int
    indptr: np.ndarray   # int64, shape (n+1,)
    indices: np.ndarray  # int32, shape (m,), rank-space targets
    order: np.ndarray    # int32: rank -> internal id
    rank: np.ndarray     # int32: internal id -> rank
    core: int

    @property
    def total_out_edges(self) -> int:
        return int(self.indptr[-1])

    def out_neighbors(self, u: int) -> np.ndarray:
        """Out-neighbors of internal vertex u as internal ids, sorted by rank."""
        r = self.rank[u]
        return self.order[self.indices[self.indptr[r]:self.indptr[r + 1]]]

    def out_degree(self, u: int) -> int:
        r = self.rank[u]
        return int(self.indptr[r + 1] - self.indptr[r])


def build_dag(g: Graph, o: CoreOrdering) -> Dag:
    """Orient every edge toward the higher-ranked endpoint."""
    if len(o.order) != g.n:
        raise ValueError("ordering does not match graph")
    n = g.n
    if g.m == 0:
        return Dag(n=n, indptr=np.zeros(n + 1, dtype=np.int64),
                   indices=np.zeros(0, dtype=np.int32),
                   order=o.order, rank=o.rank, core=o.core)
    rank = o.rank.astype(np.int64)
    us, vs = [], []
    for u, v in g.edges():
        ru, rv = rank[u], rank[v]
        if ru < rv:
            us.append(ru)
            vs.append(rv)
        else:
            us.append(rv)
            vs.append(ru)
    src = np.asarray(us, dtype=np.int64)
    dst = np.asarray(vs, dtype=np.int64)
    ordr = np.lexsort((dst, src))
    src, dst = src[ordr], dst[ordr]
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.add.at(indptr, src + 1, 1)
    np.cumsum(indptr, out=indptr)
    return Dag(n=n, indptr=indptr, indices=dst.astype(np.int32),
               order=o.order, rank=o.rank, core=o.core)
