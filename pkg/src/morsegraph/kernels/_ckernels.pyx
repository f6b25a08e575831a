# distutils: language = c++
# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; see ``_fallback`` for the reference semantics."""

from libcpp.vector cimport vector
from libcpp.pair cimport pair
from libc.stdint cimport uint64_t, int64_t

ctypedef pair[int, int64_t] Entry
ctypedef vector[Entry] Column

cdef int64_t ENTRY_LIMIT = (<int64_t>1) << 31


cdef inline uint64_t above(int w):
    if w >= 63:
        return 0
    return ~(((<uint64_t>1) << (w + 1)) - 1)


def clique_masks(adj):
    cdef int n = len(adj)
    if n > 64:
        raise ValueError("clique enumeration supports at most 64 vertices")
    cdef vector[uint64_t] a
    for x in adj:
        a.push_back(<uint64_t>x)
    cdef vector[uint64_t] st_clique
    cdef vector[uint64_t] st_cand
    cdef vector[uint64_t] out
    cdef int v, w
    cdef uint64_t clique, cand, bit
    for v in range(n - 1, -1, -1):
        st_clique.push_back((<uint64_t>1) << v)
        st_cand.push_back(a[v] & above(v))
    while st_clique.size():
        clique = st_clique.back()
        cand = st_cand.back()
        st_clique.pop_back()
        st_cand.pop_back()
        out.push_back(clique)
        for w in range(63, -1, -1):
            bit = (<uint64_t>1) << w
            if cand & bit:
                st_clique.push_back(clique | bit)
                st_cand.push_back(cand & above(w) & a[w])
    return [out[i] for i in range(out.size())]


cdef Py_ssize_t find_row(Column& col, int r):
    cdef Py_ssize_t lo = 0, hi = col.size(), mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if col[mid].first < r:
            lo = mid + 1
        else:
            hi = mid
    if lo < <Py_ssize_t>col.size() and col[lo].first == r:
        return lo
    return -1


cdef int axpy(Column& target, int64_t factor, Column& src, Column& out,
              vector[vector[int]]& row_cols, int k, int64_t modulus) except -1:
    # out = target - factor * src (mod modulus if modulus > 0), sorted by row
    cdef Py_ssize_t i = 0, j = 0
    cdef int64_t v
    out.clear()
    while i < <Py_ssize_t>target.size() or j < <Py_ssize_t>src.size():
        if j >= <Py_ssize_t>src.size() or (i < <Py_ssize_t>target.size() and target[i].first < src[j].first):
            out.push_back(target[i])
            i += 1
        elif i >= <Py_ssize_t>target.size() or src[j].first < target[i].first:
            v = -factor * src[j].second
            if modulus > 0:
                v %= modulus
                if v < 0:
                    v += modulus
            elif v >= ENTRY_LIMIT or v <= -ENTRY_LIMIT:
                raise OverflowError("entry exceeds int64 kernel range")
            if v != 0:
                out.push_back(Entry(src[j].first, v))
                if k >= 0:
                    row_cols[src[j].first].push_back(k)
            j += 1
        else:
            v = target[i].second - factor * src[j].second
            if modulus > 0:
                v %= modulus
                if v < 0:
                    v += modulus
            elif v >= ENTRY_LIMIT or v <= -ENTRY_LIMIT:
                raise OverflowError("entry exceeds int64 kernel range")
            if v != 0:
                out.push_back(Entry(target[i].first, v))
            i += 1
            j += 1
    return 0


cdef load(cols, vector[Column]& data, int64_t modulus):
    cdef Column c
    cdef int64_t v
    for col in cols:
        c.clear()
        for r in sorted(col):
            v = col[r]
            if modulus > 0:
                v %= modulus
                if v < 0:
                    v += modulus
                if v == 0:
                    continue
            elif v >= ENTRY_LIMIT or v <= -ENTRY_LIMIT:
                raise OverflowError("entry exceeds int64 kernel range")
            c.push_back(Entry(r, v))
        data.push_back(c)


def unit_eliminate(cols, int nrows):
    cdef vector[Column] data
    load(cols, data, 0)
    cdef int ncols = data.size()
    cdef vector[vector[int]] row_cols = vector[vector[int]](nrows)
    cdef vector[int] row_count = vector[int](nrows, 0)
    cdef vector[char] alive = vector[char](ncols, 1)
    cdef vector[char] row_alive = vector[char](nrows, 1)
    cdef Column scratch
    cdef int j, k, r, best, pivots = 0
    cdef Py_ssize_t i, pos
    cdef int64_t e, factor
    cdef bint progress = True
    for j in range(ncols):
        for i in range(data[j].size()):
            row_cols[data[j][i].first].push_back(j)
            row_count[data[j][i].first] += 1
    while progress:
        progress = False
        for j in range(ncols):
            if not alive[j]:
                continue
            best = -1
            for i in range(data[j].size()):
                r = data[j][i].first
                if (data[j][i].second == 1 or data[j][i].second == -1) and (
                        best < 0 or row_count[r] < row_count[best]):
                    best = r
            if best < 0:
                continue
            pos = find_row(data[j], best)
            e = data[j][pos].second
            for i in range(row_cols[best].size()):
                k = row_cols[best][i]
                if k == j or not alive[k]:
                    continue
                pos = find_row(data[k], best)
                if pos < 0:
                    continue
                factor = data[k][pos].second * e
                for r in range(<int>data[k].size()):
                    row_count[data[k][r].first] -= 1
                axpy(data[k], factor, data[j], scratch, row_cols, k, 0)
                data[k].swap(scratch)
                for r in range(<int>data[k].size()):
                    row_count[data[k][r].first] += 1
            for i in range(data[j].size()):
                row_count[data[j][i].first] -= 1
            alive[j] = 0
            row_alive[best] = 0
            row_cols[best].clear()
            pivots += 1
            progress = True
    residual = []
    for j in range(ncols):
        if alive[j] and data[j].size():
            residual.append({data[j][i].first: data[j][i].second for i in range(data[j].size())})
    return pivots, residual


def rank_mod_p(cols, int nrows, int64_t p):
    cdef vector[Column] data
    load(cols, data, p)
    cdef vector[int] pivot_col = vector[int](nrows, -1)
    cdef vector[Column] reduced
    cdef vector[vector[int]] unused
    cdef Column scratch, cur
    cdef int j, low, rank = 0
    cdef int64_t inv, f
    cdef Py_ssize_t i
    for j in range(data.size()):
        cur = data[j]
        while cur.size():
            low = cur.back().first
            if pivot_col[low] < 0:
                inv = pow_mod(cur.back().second, p - 2, p)
                for i in range(cur.size()):
                    cur[i].second = cur[i].second * inv % p
                pivot_col[low] = reduced.size()
                reduced.push_back(cur)
                rank += 1
                break
            f = cur.back().second
            axpy(cur, f, reduced[pivot_col[low]], scratch, unused, -1, p)
            cur.swap(scratch)
    return rank


cdef int64_t pow_mod(int64_t base, int64_t exp, int64_t m):
    cdef int64_t result = 1
    base %= m
    if base < 0:
        base += m
    while exp > 0:
        if exp & 1:
            result = result * base % m
        base = base * base % m
        exp >>= 1
    return result
