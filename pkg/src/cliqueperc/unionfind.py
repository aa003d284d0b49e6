"""Disjoint-set forest with path compression and union by rank."""

from __future__ import annotations

__all__ = ["UnionFind"]


class UnionFind:
    """Forest of disjoint sets over ids handed out by `make_set`.

    Roots are self-parented. `union` is variadic: it merges any number of
    trees given by their roots, the survivor being the root of largest rank
    (smallest id on ties). Operation counters are kept for instrumentation.
    """

    __slots__ = ("parent", "rank", "_n_roots", "n_finds", "n_unions")

    def __init__(self):
        self.parent: list[int] = []
        self.rank: list[int] = []
        self._n_roots = 0
        self.n_finds = 0
        self.n_unions = 0

    @property
    def count_nodes(self) -> int:
        """Number of make_set calls so far."""
        return len(self.parent)

    @property
    def count_roots(self) -> int:
        """Current number of disjoint sets."""
        return self._n_roots

    def make_set(self) -> int:
        p = len(self.parent)
        self.parent.append(p)
        self.rank.append(0)
        self._n_roots += 1
        return p

    def find(self, p: int) -> int:
        """Root of p's tree; compresses the traversed path onto the root."""
        parent = self.parent
        if not 0 <= p < len(parent):
            raise ValueError(f"unknown union-find node {p}")
        self.n_finds += 1
        root = p
        while parent[root] != root:
            root = parent[root]
        while parent[p] != root:
            parent[p], p = root, parent[p]
        return root

    def root(self, p: int) -> int:
        """Like find, but read-only: no compression, no counter. Safe for
        concurrent readers of a finished structure."""
        parent = self.parent
        if not 0 <= p < len(parent):
            raise ValueError(f"unknown union-find node {p}")
        while parent[p] != p:
            p = parent[p]
        return p

    def union(self, roots) -> int:
        """Merge the trees rooted at `roots`; returns the surviving root.

        Every element must currently be a root (pass `find` results). A
        singleton is a no-op.
        """
        parent, rank = self.parent, self.rank
        rs = set(roots)
        if not rs:
            raise ValueError("union of empty set")
        for r in rs:
            if not 0 <= r < len(parent):
                raise ValueError(f"unknown union-find node {r}")
            if parent[r] != r:
                raise ValueError(f"union argument {r} is not a root")
        self.n_unions += 1
        # Folding in (rank desc, id asc) order keeps the first element the
        # winner of every binary step, so the survivor is the max-rank root
        # with the smallest id at call time.
        ordered = sorted(rs, key=lambda r: (-rank[r], r))
        winner = ordered[0]
        for r in ordered[1:]:
            if rank[winner] == rank[r]:
                rank[winner] += 1
            parent[r] = winner
            self._n_roots -= 1
        return winner

    def sets(self) -> dict[int, list[int]]:
        """Current partition as root -> sorted member list (diagnostics)."""
        out: dict[int, list[int]] = {}
        for p in range(len(self.parent)):
            out.setdefault(self.find(p), []).append(p)
        return out

    @classmethod
    def _from_state(cls, parent, rank, n_roots, n_finds, n_unions) -> "UnionFind":
        # handoff point for the compiled percolation kernels
        uf = cls()
        uf.parent = list(parent)
        uf.rank = list(rank)
        uf._n_roots = n_roots
        uf.n_finds = n_finds
        uf.n_unions = n_unions
        return uf
