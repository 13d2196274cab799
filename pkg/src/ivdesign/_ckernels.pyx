# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Same contracts and outputs as ``_pykernels``."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t
from libc.stdlib cimport malloc, free

cnp.import_array()


def mcs_order(Py_ssize_t n, const int64_t[::1] indptr, const int64_t[::1] indices):
    cdef int64_t[::1] head = np.full(n + 1, -1, dtype=np.int64)
    cdef int64_t[::1] nxt = np.full(max(n, 1), -1, dtype=np.int64)
    cdef int64_t[::1] prv = np.full(max(n, 1), -1, dtype=np.int64)
    cdef int64_t[::1] label = np.zeros(max(n, 1), dtype=np.int64)
    cdef char[::1] done = np.zeros(max(n, 1), dtype=np.int8)
    cdef int64_t[::1] order = np.empty(n, dtype=np.int64)
    cdef Py_ssize_t i, k
    cdef int64_t v, u, lu, top = 0
    for i in range(n - 1, -1, -1):
        v = i
        nxt[v] = head[0]
        if head[0] >= 0:
            prv[head[0]] = v
        head[0] = v
    with nogil:
        for i in range(n):
            while top > 0 and head[top] < 0:
                top -= 1
            v = head[top]
            head[top] = nxt[v]
            if nxt[v] >= 0:
                prv[nxt[v]] = -1
            done[v] = 1
            order[i] = v
            for k in range(indptr[v], indptr[v + 1]):
                u = indices[k]
                if done[u]:
                    continue
                lu = label[u]
                if prv[u] >= 0:
                    nxt[prv[u]] = nxt[u]
                else:
                    head[lu] = nxt[u]
                if nxt[u] >= 0:
                    prv[nxt[u]] = prv[u]
                lu += 1
                label[u] = lu
                prv[u] = -1
                nxt[u] = head[lu]
                if head[lu] >= 0:
                    prv[head[lu]] = u
                head[lu] = u
                if lu > top:
                    top = lu
    return [int(x) for x in order]


cdef int64_t _peo_violation(const int64_t[::1] ordv, const int64_t[::1] indptr,
                            const int64_t[::1] indices, int64_t[::1] pos,
                            int64_t[::1] stamp) noexcept nogil:
    cdef Py_ssize_t n = ordv.shape[0]
    cdef Py_ssize_t i, k
    cdef int64_t v, u, parent, best, pv
    for i in range(n):
        pos[ordv[i]] = i
    for i in range(n):
        v = ordv[i]
        pv = pos[v]
        parent = -1
        best = n
        for k in range(indptr[v], indptr[v + 1]):
            u = indices[k]
            if pos[u] > pv and pos[u] < best:
                best = pos[u]
                parent = u
        if parent < 0:
            continue
        for k in range(indptr[parent], indptr[parent + 1]):
            stamp[indices[k]] = v
        for k in range(indptr[v], indptr[v + 1]):
            u = indices[k]
            if pos[u] > best and stamp[u] != v:
                return v
    return -1


def peo_violation(order, const int64_t[::1] indptr, const int64_t[::1] indices):
    cdef int64_t[::1] ordv = np.ascontiguousarray(order, dtype=np.int64)
    cdef Py_ssize_t n = ordv.shape[0]
    cdef int64_t[::1] pos = np.zeros(max(n, 1), dtype=np.int64)
    cdef int64_t[::1] stamp = np.full(max(n, 1), -1, dtype=np.int64)
    cdef int64_t r
    with nogil:
        r = _peo_violation(ordv, indptr, indices, pos, stamp)
    return int(r)


cdef struct DPState:
    int b
    int nsep
    int nk
    int64_t inf
    int64_t* radix
    int64_t* unit_cost
    int64_t* caps
    int64_t* counts
    int64_t* sstride
    int64_t* nstride
    int64_t* contrib      # b x nk
    int64_t* cidx
    int64_t** ktab
    int64_t* table
    int64_t* argmin


cdef void _rec(DPState* st, int p, int64_t sidx, int64_t ncode, int64_t cost) noexcept nogil:
    cdef int i
    cdef int64_t j, total, val
    cdef int64_t* row
    if p == st.b:
        total = cost
        for i in range(st.nk):
            val = st.ktab[i][st.cidx[i]]
            if val >= st.inf:
                return
            total += val
        if total < st.table[sidx]:
            st.table[sidx] = total
            st.argmin[sidx] = ncode
        return
    row = st.contrib + p * st.nk
    for j in range(st.radix[p]):
        if st.counts[j] >= st.caps[j]:
            continue
        st.counts[j] += 1
        for i in range(st.nk):
            st.cidx[i] += j * row[i]
        if p < st.nsep:
            _rec(st, p + 1, sidx + j * st.sstride[p], ncode, cost)
        else:
            _rec(st, p + 1, sidx, ncode + j * st.nstride[p], cost + j * st.unit_cost[p])
        for i in range(st.nk):
            st.cidx[i] -= j * row[i]
        st.counts[j] -= 1


def dp_bag(radix, int nsep, unit_cost, caps, children, int64_t inf):
    cdef int64_t[::1] rad = np.ascontiguousarray(radix, dtype=np.int64)
    cdef int64_t[::1] ucost = np.ascontiguousarray(unit_cost, dtype=np.int64)
    cdef int64_t[::1] capv = np.ascontiguousarray(caps, dtype=np.int64)
    cdef int b = rad.shape[0]
    cdef int nk = len(children)
    cdef int p, i
    cdef int64_t s
    cdef int64_t[::1] sstride = np.zeros(max(b, 1), dtype=np.int64)
    cdef int64_t[::1] nstride = np.zeros(max(b, 1), dtype=np.int64)
    s = 1
    for p in range(nsep - 1, -1, -1):
        sstride[p] = s
        s *= rad[p]
    cdef int64_t size = s
    s = 1
    for p in range(b - 1, nsep - 1, -1):
        nstride[p] = s
        s *= rad[p]
    table_np = np.full(size, inf, dtype=np.int64)
    argmin_np = np.full(size, -1, dtype=np.int64)
    cdef int64_t[::1] table = table_np
    cdef int64_t[::1] argmin = argmin_np
    cdef int64_t[::1] contrib = np.zeros(max(b * nk, 1), dtype=np.int64)
    cdef int64_t[::1] cidx = np.zeros(max(nk, 1), dtype=np.int64)
    cdef int64_t[::1] counts = np.zeros(capv.shape[0], dtype=np.int64)
    cdef int64_t[::1] kt
    keep = []
    for i in range(nk):
        t, ps, st = children[i]
        t = np.ascontiguousarray(t, dtype=np.int64)
        keep.append(t)
        for q in range(len(ps)):
            contrib[int(ps[q]) * nk + i] = int(st[q])
    cdef int64_t** ktab = <int64_t**> malloc(max(nk, 1) * sizeof(int64_t*))
    if ktab == NULL:
        raise MemoryError()
    cdef DPState state
    try:
        for i in range(nk):
            kt = keep[i]
            ktab[i] = &kt[0]
        state.b = b
        state.nsep = nsep
        state.nk = nk
        state.inf = inf
        state.radix = &rad[0] if b > 0 else NULL
        state.unit_cost = &ucost[0] if b > 0 else NULL
        state.caps = &capv[0]
        state.counts = &counts[0]
        state.sstride = &sstride[0]
        state.nstride = &nstride[0]
        state.contrib = &contrib[0]
        state.cidx = &cidx[0]
        state.ktab = ktab
        state.table = &table[0]
        state.argmin = &argmin[0]
        with nogil:
            _rec(&state, 0, 0, 0, 0)
    finally:
        free(ktab)
    return table_np, argmin_np
