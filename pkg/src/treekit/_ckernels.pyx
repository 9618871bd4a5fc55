# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the kernels in ``_pykernels``.

Both entry points fall back to the pure-Python code whenever the input is
outside the range where 64/128-bit machine integers are provably exact.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memcpy

from treekit import _pykernels

cdef extern from *:
    ctypedef long long int128 "__int128"

# Bareiss intermediates are minors, bounded by the Hadamard bound H; the
# cross products are < 2*H**2, so H < 2**62 keeps everything inside int128.
cdef object _HADAMARD_SQ_LIMIT = 1 << 124

cdef enum:
    MAXV = 32


def det_bareiss(rows):
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t i, j, k
    cdef long long *a
    cdef long long prev, akk, aik, tmp
    cdef int128 num
    cdef int sign = 1
    if n == 0:
        return 1
    bound = 1
    for r in rows:
        if len(r) != n:
            raise ValueError("matrix is not square")
        sq = 0
        for x in r:
            sq += x * x
        if sq == 0:
            return 0
        bound *= sq
        if bound >= _HADAMARD_SQ_LIMIT:
            return _pykernels.det_bareiss(rows)
    a = <long long *> malloc(n * n * sizeof(long long))
    if a == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            r = rows[i]
            for j in range(n):
                a[i * n + j] = r[j]
        prev = 1
        for k in range(n - 1):
            if a[k * n + k] == 0:
                for i in range(k + 1, n):
                    if a[i * n + k] != 0:
                        break
                else:
                    return 0
                for j in range(n):
                    tmp = a[k * n + j]
                    a[k * n + j] = a[i * n + j]
                    a[i * n + j] = tmp
                sign = -sign
            akk = a[k * n + k]
            for i in range(k + 1, n):
                aik = a[i * n + k]
                for j in range(k + 1, n):
                    num = <int128> akk * a[i * n + j] - <int128> aik * a[k * n + j]
                    a[i * n + j] = <long long> (num / prev)
                a[i * n + k] = 0
            prev = akk
        return sign * a[n * n - 1]
    finally:
        free(a)


cdef bint _connected(long long *m, int nv):
    cdef int seen[MAXV]
    cdef int stack[MAXV]
    cdef int top = 0, count = 1, u, w
    for u in range(nv):
        seen[u] = 0
    seen[0] = 1
    stack[top] = 0
    top += 1
    while top:
        top -= 1
        u = stack[top]
        for w in range(nv):
            if m[u * MAXV + w] and not seen[w]:
                seen[w] = 1
                count += 1
                stack[top] = w
                top += 1
    return count == nv


cdef void _drop_vertex(long long *src, long long *dst, int nv, int v):
    cdef int i, j, ii = 0, jj
    for i in range(nv):
        if i == v:
            continue
        jj = 0
        for j in range(nv):
            if j == v:
                continue
            dst[ii * MAXV + jj] = src[i * MAXV + j]
            jj += 1
        ii += 1


cdef long long _dc(long long *m, int nv):
    cdef long long child[MAXV * MAXV]
    cdef int u, v, w, nbr, deg
    cdef long long k, total
    if nv == 1:
        return 1
    if not _connected(m, nv):
        return 0
    for v in range(nv):
        deg = 0
        nbr = -1
        for w in range(nv):
            if m[v * MAXV + w]:
                deg += 1
                nbr = w
        if deg == 1:
            k = m[v * MAXV + nbr]
            _drop_vertex(m, child, nv, v)
            return k * _dc(child, nv - 1)
    for u in range(nv):
        for v in range(u + 1, nv):
            k = m[u * MAXV + v]
            if k:
                memcpy(child, m, MAXV * MAXV * sizeof(long long))
                child[u * MAXV + v] = 0
                child[v * MAXV + u] = 0
                total = _dc(child, nv)
                memcpy(child, m, MAXV * MAXV * sizeof(long long))
                child[u * MAXV + v] = 0
                child[v * MAXV + u] = 0
                for w in range(nv):
                    child[u * MAXV + w] += child[v * MAXV + w]
                    child[w * MAXV + u] = child[u * MAXV + w]
                child[u * MAXV + u] = 0
                # reuse the buffer: shift rows/cols past v in place
                _drop_vertex(child, child, nv, v)
                return total + k * _dc(child, nv - 1)
    return 0


def dc_count(mult):
    cdef Py_ssize_t nv = len(mult)
    cdef long long buf[MAXV * MAXV]
    cdef Py_ssize_t i, j
    if nv == 0:
        return 1
    edges = 0
    for row in mult:
        for x in row:
            edges += x
    # t(G) <= 2**n_edges, so 62 edges keeps int64 exact
    if nv > MAXV or edges // 2 >= 62:
        return _pykernels.dc_count(mult)
    for i in range(nv):
        row = mult[i]
        for j in range(nv):
            buf[i * MAXV + j] = row[j]
    return _dc(buf, <int> nv)
