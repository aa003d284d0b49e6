# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled kernels: clique listing over the oriented DAG and the two
percolation loops.

Semantic twin of `cliqueperc._kernels_py`; emission order, membership
contents, and every counter must match the pure backend bit for bit.
"""

from itertools import combinations

from cpython.ref cimport Py_INCREF
from cpython.tuple cimport (PyTuple_Check, PyTuple_GET_ITEM, PyTuple_New,
                            PyTuple_SET_ITEM)
from libcpp.vector cimport vector

from .errors import MemoryBudgetError
from .unionfind import UnionFind

__all__ = ["count_cliques", "iter_cliques", "cpm_run", "cpmz_run"]


# ---------------------------------------------------------------------------
# clique listing

cdef long long _count_rec(const long long* iptr, const int* idx,
                          const int* cand, long long clen, int need,
                          int* scratch, long long width) noexcept nogil:
    cdef long long total = 0
    cdef long long i, a, b, bhi, nlen
    cdef int u
    if need == 1:
        return clen
    for i in range(clen):
        u = cand[i]
        nlen = 0
        a = i + 1
        b = iptr[u]
        bhi = iptr[u + 1]
        while a < clen and b < bhi:
            if cand[a] < idx[b]:
                a += 1
            elif cand[a] > idx[b]:
                b += 1
            else:
                scratch[nlen] = cand[a]
                nlen += 1
                a += 1
                b += 1
        if nlen >= need - 1:
            total += _count_rec(iptr, idx, scratch, nlen, need - 1,
                                scratch + width, width)
    return total


def count_cliques(n, indptr, indices, int k):
    """Number of k-cliques in the DAG given as a rank-space CSR."""
    if k < 2:
        raise ValueError("k must be >= 2")
    cdef const long long[::1] iptr = indptr
    cdef const int[::1] idx = indices
    cdef long long nn = n
    cdef long long m = iptr[nn] if nn >= 0 else 0
    if k == 2 or m == 0:
        return int(m) if k == 2 else 0
    cdef long long width = 0
    cdef long long r, lo, hi
    for r in range(nn):
        if iptr[r + 1] - iptr[r] > width:
            width = iptr[r + 1] - iptr[r]
    cdef vector[int] scratch
    scratch.resize(max(<long long>1, (k - 2) * width))
    cdef long long total = 0
    cdef const long long* ip = &iptr[0]
    cdef const int* ix = &idx[0]
    cdef int* sc = &scratch[0]
    with nogil:
        for r in range(nn):
            lo = ip[r]
            hi = ip[r + 1]
            if hi - lo >= k - 1:
                total += _count_rec(ip, ix, ix + lo, hi - lo, k - 1, sc, width)
    return int(total)


cdef class _CliqueIter:
    """Iterative depth-first expansion; yields sorted internal-id tuples in
    the same order as the pure backend's recursive generator."""

    cdef const long long[::1] iptr
    cdef const int[::1] idx
    cdef const int[::1] order
    cdef long long n, root
    cdef int k, bottom, depth
    cdef long long width
    cdef vector[int] bufs      # (k-1) rows of `width` candidate slots
    cdef vector[long long] lens, cursors
    cdef vector[int] prefix    # rank-space: root plus choices above bottom
    cdef bint done

    def __cinit__(self, n, indptr, indices, order, int k):
        if k < 2:
            raise ValueError("k must be >= 2")
        self.iptr = indptr
        self.idx = indices
        self.order = order
        self.n = n
        self.k = k
        self.bottom = k - 2
        self.width = 0
        cdef long long r
        for r in range(self.n):
            if self.iptr[r + 1] - self.iptr[r] > self.width:
                self.width = self.iptr[r + 1] - self.iptr[r]
        self.bufs.resize(max(<long long>1, (k - 1) * self.width))
        self.lens.resize(k - 1)
        self.cursors.resize(k - 1)
        self.prefix.resize(k - 1)
        self.root = -1
        self.depth = -1
        self.done = self.n == 0 or self.width < k - 1

    def __iter__(self):
        return self

    cdef object _emit(self, int last):
        cdef int kk = self.k
        cdef vector[int] ids
        ids.resize(kk)
        cdef int i, j, x
        for i in range(kk - 1):
            ids[i] = self.order[self.prefix[i]]
        ids[kk - 1] = self.order[last]
        # insertion sort: k is small
        for i in range(1, kk):
            x = ids[i]
            j = i - 1
            while j >= 0 and ids[j] > x:
                ids[j + 1] = ids[j]
                j -= 1
            ids[j + 1] = x
        out = PyTuple_New(kk)
        cdef object item
        for i in range(kk):
            item = ids[i]
            Py_INCREF(item)
            PyTuple_SET_ITEM(out, i, item)
        return out

    def __next__(self):
        cdef long long lo, hi, i, a, b, bhi, nlen, clen
        cdef int u, d
        cdef int* row
        cdef int* nxt
        if self.done:
            raise StopIteration
        while True:
            if self.depth < 0:
                # advance to the next root with enough out-neighbors
                self.root += 1
                while self.root < self.n:
                    lo = self.iptr[self.root]
                    hi = self.iptr[self.root + 1]
                    if hi - lo >= self.k - 1:
                        break
                    self.root += 1
                if self.root >= self.n:
                    self.done = True
                    raise StopIteration
                row = &self.bufs[0]
                for i in range(hi - lo):
                    row[i] = self.idx[lo + i]
                self.prefix[0] = <int>self.root
                self.lens[0] = hi - lo
                self.cursors[0] = 0
                self.depth = 0
            d = self.depth
            row = &self.bufs[0] + d * self.width
            if self.cursors[d] >= self.lens[d]:
                self.depth = d - 1
                continue
            if d == self.bottom:
                u = row[self.cursors[d]]
                self.cursors[d] += 1
                return self._emit(u)
            # expand: intersect the tail with out(u)
            i = self.cursors[d]
            u = row[i]
            self.cursors[d] += 1
            clen = self.lens[d]
            nxt = &self.bufs[0] + (d + 1) * self.width
            nlen = 0
            a = i + 1
            b = self.iptr[u]
            bhi = self.iptr[u + 1]
            while a < clen and b < bhi:
                if row[a] < self.idx[b]:
                    a += 1
                elif row[a] > self.idx[b]:
                    b += 1
                else:
                    nxt[nlen] = row[a]
                    nlen += 1
                    a += 1
                    b += 1
            if nlen >= self.k - 1 - (d + 1):
                self.prefix[d + 1] = u
                self.lens[d + 1] = nlen
                self.cursors[d + 1] = 0
                self.depth = d + 1


def iter_cliques(n, indptr, indices, order, int k):
    """Yield every k-clique once as a sorted tuple of internal ids."""
    return _CliqueIter(n, indptr, indices, order, k)


# ---------------------------------------------------------------------------
# union-find on C vectors (exported to a UnionFind at the end of a run)

cdef long long _uf_find(vector[long long]& parent, long long p,
                        long long* finds) noexcept nogil:
    finds[0] += 1
    cdef long long root = p, nxt
    while parent[root] != root:
        root = parent[root]
    while parent[p] != root:
        nxt = parent[p]
        parent[p] = root
        p = nxt
    return root


cdef long long _uf_union(vector[long long]& parent, vector[long long]& rank_,
                         vector[long long]& roots, long long* n_roots,
                         long long* n_unions) noexcept nogil:
    # callers pass current roots; sort by (rank desc, id asc), dedup, fold
    n_unions[0] += 1
    cdef long long i, j, x, sz = roots.size()
    for i in range(1, sz):
        x = roots[i]
        j = i - 1
        while j >= 0 and (rank_[roots[j]] < rank_[x]
                          or (rank_[roots[j]] == rank_[x] and roots[j] > x)):
            roots[j + 1] = roots[j]
            j -= 1
        roots[j + 1] = x
    cdef long long winner = roots[0]
    for i in range(1, sz):
        x = roots[i]
        if x == roots[i - 1]:
            continue
        if rank_[winner] == rank_[x]:
            rank_[winner] += 1
        parent[x] = winner
        n_roots[0] -= 1
    return winner


cdef object _export_uf(vector[long long]& parent, vector[long long]& rank_,
                       long long n_roots, long long n_finds, long long n_unions):
    cdef long long i, sz = parent.size()
    pl = [None] * sz
    rl = [None] * sz
    for i in range(sz):
        pl[i] = parent[i]
        rl[i] = rank_[i]
    return UnionFind._from_state(pl, rl, n_roots, n_finds, n_unions)


# ---------------------------------------------------------------------------
# percolation

cdef vector[int] _flatten(patterns):
    cdef vector[int] flat
    for row in patterns:
        for v in row:
            flat.push_back(v)
    return flat


cdef object _subkey(object ck, const int* pat, int width):
    cdef int j
    out = PyTuple_New(width)
    for j in range(width):
        item = <object>PyTuple_GET_ITEM(ck, pat[j])
        Py_INCREF(item)
        PyTuple_SET_ITEM(out, j, item)
    return out


cdef object _as_checked_tuple(object ck, int k):
    if not PyTuple_Check(ck):
        ck = tuple(ck)
    if len(ck) != k:
        raise ValueError(f"expected a {k}-clique key, got {ck!r}")
    cdef int i
    for i in range(k - 1):
        if not (<object>PyTuple_GET_ITEM(ck, i)) < (<object>PyTuple_GET_ITEM(ck, i + 1)):
            raise ValueError(f"clique key not strictly increasing: {ck!r}")
    return ck


def cpm_run(cliques, int k, key_budget_bytes=None):
    """Exact percolation loop; see the pure backend for the contract."""
    if k < 2:
        raise ValueError("k must be >= 2")
    cdef vector[long long] parent, rank_
    cdef long long n_roots = 0, n_finds = 0, n_unions = 0
    cdef long long n_k = 0, budget = -1
    if key_budget_bytes is not None:
        budget = key_budget_bytes
    cdef int width = k - 1
    cdef vector[int] pats = _flatten(combinations(range(k), k - 1))
    cdef vector[long long] to_merge
    cdef long long node, nkeys
    cdef int s
    membership = {}
    for ck in cliques:
        ck = _as_checked_tuple(ck, k)
        n_k += 1
        to_merge.clear()
        for s in range(k):
            sub = _subkey(ck, &pats[0] + s * width, width)
            hit = membership.get(sub)
            if hit is None:
                node = parent.size()
                parent.push_back(node)
                rank_.push_back(0)
                n_roots += 1
                membership[sub] = node
                nkeys = len(membership)
                if budget >= 0 and nkeys * width * 4 > budget:
                    raise MemoryBudgetError(nkeys, nkeys * width * 4, key_budget_bytes)
            else:
                node = _uf_find(parent, hit, &n_finds)
            to_merge.push_back(node)
        _uf_union(parent, rank_, to_merge, &n_roots, &n_unions)
    counters = {
        "n_k": n_k,
        "peak_keys": len(membership),  # keys are never removed
        "line8_execs": 0,
        "setz_size_sum": 0,
        "setz_max": 0,
    }
    return _export_uf(parent, rank_, n_roots, n_finds, n_unions), membership, counters


def cpmz_run(cliques, int k, int z, strict=False, key_budget_bytes=None):
    """Relaxed percolation loop; see the pure backend for the contract."""
    if k < 2:
        raise ValueError("k must be >= 2")
    if not 2 <= z <= k - 2:
        raise ValueError(f"z must be in [2, k-2]; got z={z}, k={k}")
    cdef vector[long long] parent, rank_
    cdef long long n_roots = 0, n_finds = 0, n_unions = 0
    cdef long long n_k = 0, budget = -1
    if key_budget_bytes is not None:
        budget = key_budget_bytes
    cdef bint strict_mode = bool(strict)
    cdef int n_subs = k
    cdef vector[int] sub_pats = _flatten(combinations(range(k), k - 1))
    zsub_rows = list(combinations(range(k - 1), z))
    cdef int n_zsub = len(zsub_rows)
    cdef vector[int] zsub_pats = _flatten(zsub_rows)
    zall_rows = list(combinations(range(k), z))
    cdef int n_zall = len(zall_rows)
    cdef vector[int] zall_pats = _flatten(zall_rows)
    cdef long long line8 = 0, size_sum = 0, size_max = 0, size, q, nkeys, root
    cdef vector[long long] to_merge
    cdef int s, t, j
    cdef bint first
    cdef const int* subp
    cdef const int* zp
    zsets = {}
    for ck in cliques:
        ck = _as_checked_tuple(ck, k)
        n_k += 1
        to_merge.clear()
        for s in range(n_subs):
            subp = &sub_pats[0] + s * (k - 1)
            common = None
            for t in range(n_zsub):
                if common is not None and len(<set>common) == 0 and not strict_mode:
                    break
                zp = &zsub_pats[0] + t * z
                # build the z-clique key through the composed position maps
                cz = PyTuple_New(z)
                for j in range(z):
                    item = <object>PyTuple_GET_ITEM(ck, subp[zp[j]])
                    Py_INCREF(item)
                    PyTuple_SET_ITEM(cz, j, item)
                line8 += 1
                cur = zsets.get(cz)
                if cur is None:
                    reduced = None
                else:
                    size = len(<set>cur)
                    size_sum += size
                    if size > size_max:
                        size_max = size
                    reduced = set()
                    for p in <set>cur:
                        root = _uf_find(parent, p, &n_finds)
                        (<set>reduced).add(root)
                    zsets[cz] = reduced
                if common is None:
                    common = set() if reduced is None else set(<set>reduced)
                elif reduced is None:
                    (<set>common).clear()
                else:
                    common = (<set>common) & (<set>reduced)
            if common is not None and len(<set>common) > 0:
                for p in <set>common:
                    to_merge.push_back(p)
        if to_merge.size() > 0:
            q = _uf_union(parent, rank_, to_merge, &n_roots, &n_unions)
        else:
            q = parent.size()
            parent.push_back(q)
            rank_.push_back(0)
            n_roots += 1
        for t in range(n_zall):
            zp = &zall_pats[0] + t * z
            cz = PyTuple_New(z)
            for j in range(z):
                item = <object>PyTuple_GET_ITEM(ck, zp[j])
                Py_INCREF(item)
                PyTuple_SET_ITEM(cz, j, item)
            cur = zsets.get(cz)
            if cur is None:
                zsets[cz] = {q}
                nkeys = len(zsets)
                if budget >= 0 and nkeys * z * 4 > budget:
                    raise MemoryBudgetError(nkeys, nkeys * z * 4, key_budget_bytes)
            else:
                (<set>cur).add(q)
    counters = {
        "n_k": n_k,
        "peak_keys": len(zsets),  # keys are never removed
        "line8_execs": line8,
        "setz_size_sum": size_sum,
        "setz_max": int(size_max),
    }
    return _export_uf(parent, rank_, n_roots, n_finds, n_unions), zsets, counters
