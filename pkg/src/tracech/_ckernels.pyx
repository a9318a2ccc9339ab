# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels.  Mirrors ``_pykernels`` exactly."""

from libc.stdint cimport int64_t
from libc.stdlib cimport malloc, free

GOOD = 0
SCENARIO_1 = 1
SCENARIO_2 = 2

cdef extern from *:
    """
    static inline int tc_mul_overflow(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int tc_add_overflow(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    """
    int tc_mul_overflow(long long a, long long b, long long *r) nogil
    int tc_add_overflow(long long a, long long b, long long *r) nogil


cdef struct Adj:
    int n
    int *deg
    int *nbr      # n*n, row v holds successors of v (0-based)
    long long *w  # n*n, weight of arc v -> nbr


def closed_walks(succ, int n, int k):
    if k < 1:
        raise ValueError("walk length must be >= 1")
    cdef int *deg = <int *>malloc(sizeof(int) * (n + 1))
    cdef int *nbr = <int *>malloc(sizeof(int) * (n + 1) * (n + 1))
    cdef int *path = <int *>malloc(sizeof(int) * (k + 1))
    cdef int *idx = <int *>malloc(sizeof(int) * (k + 1))
    cdef int v, d, start, depth, w, t
    out = []
    try:
        for v in range(1, n + 1):
            row = succ[v]
            deg[v] = len(row)
            for d in range(deg[v]):
                nbr[v * (n + 1) + d] = row[d]
        for start in range(1, n + 1):
            path[0] = start
            depth = 0
            idx[0] = 0
            while depth >= 0:
                v = path[depth]
                if depth == k - 1:
                    for d in range(deg[v]):
                        if nbr[v * (n + 1) + d] == start:
                            path[k] = start
                            out.append(tuple([path[t] for t in range(k + 1)]))
                    depth -= 1
                    continue
                if idx[depth] < deg[v]:
                    w = nbr[v * (n + 1) + idx[depth]]
                    idx[depth] += 1
                    depth += 1
                    path[depth] = w
                    idx[depth] = 0
                else:
                    depth -= 1
    finally:
        free(deg)
        free(nbr)
        free(path)
        free(idx)
    return out


cdef int _sum_walks(Adj *adj, int k, long long *total) nogil:
    """Iterative DFS; returns 1 on int64 overflow."""
    cdef int n = adj.n
    cdef int start, depth, v, j, d
    cdef long long p, last, acc = 0
    cdef int *path = <int *>malloc(sizeof(int) * (k + 1))
    cdef int *idx = <int *>malloc(sizeof(int) * (k + 1))
    cdef long long *prod = <long long *>malloc(sizeof(long long) * (k + 1))
    cdef int overflow = 0
    cdef long long wdiag
    for start in range(n):
        path[0] = start
        prod[0] = 1
        idx[0] = 0
        depth = 0
        while depth >= 0 and not overflow:
            v = path[depth]
            if depth == k - 1:
                # closing arc v -> start
                wdiag = 0
                for d in range(adj.deg[v]):
                    if adj.nbr[v * n + d] == start:
                        wdiag = adj.w[v * n + d]
                        break
                if wdiag != 0:
                    if tc_mul_overflow(prod[depth], wdiag, &last) or tc_add_overflow(acc, last, &acc):
                        overflow = 1
                depth -= 1
                continue
            if idx[depth] < adj.deg[v]:
                d = idx[depth]
                idx[depth] += 1
                j = adj.nbr[v * n + d]
                if tc_mul_overflow(prod[depth], adj.w[v * n + d], &p):
                    overflow = 1
                    break
                depth += 1
                path[depth] = j
                prod[depth] = p
                idx[depth] = 0
            else:
                depth -= 1
        if overflow:
            break
    free(path)
    free(idx)
    free(prod)
    total[0] = acc
    return overflow


def int_walk_weight_sum(weights, int n, int k):
    if k < 1:
        raise ValueError("walk length must be >= 1")
    cdef Adj adj
    cdef long long total = 0
    cdef int v, j, d, status
    adj.n = n
    adj.deg = <int *>malloc(sizeof(int) * n)
    adj.nbr = <int *>malloc(sizeof(int) * n * n)
    adj.w = <long long *>malloc(sizeof(long long) * n * n)
    try:
        for v in range(n):
            row = weights[v]
            d = 0
            for j in range(n):
                x = row[j]
                if x:
                    # raises OverflowError for entries beyond int64
                    adj.w[v * n + d] = x
                    adj.nbr[v * n + d] = j
                    d += 1
            adj.deg[v] = d
        with nogil:
            status = _sum_walks(&adj, k, &total)
    finally:
        free(adj.deg)
        free(adj.nbr)
        free(adj.w)
    if status:
        raise OverflowError("walk weight sum exceeds int64")
    return total


def classify_walk(tuple walk, member):
    cdef Py_ssize_t k = len(walk) - 1
    cdef Py_ssize_t t, s
    cdef int x
    cdef dict seen = {}
    for t in range(k + 1):
        x = walk[t]
        if member[x]:
            return (SCENARIO_1, t, x)
        prev = seen.get(x)
        if prev is not None:
            s = prev
            if s == 0 and t == k:
                return (GOOD, 0, 0)
            return (SCENARIO_2, s, t)
        seen[x] = t
    raise ValueError("walk does not close")
