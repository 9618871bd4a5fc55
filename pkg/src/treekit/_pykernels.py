"""Pure-Python implementations of the hot kernels.

These are the reference versions; ``_ckernels.pyx`` mirrors them with the
same call signatures and is preferred when it has been compiled.
"""


def det_bareiss(rows):
    """Exact determinant of a square integer matrix (fraction-free elimination).

    ``rows`` is a sequence of equal-length integer sequences; it is not modified.
    """
    a = [list(r) for r in rows]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("matrix is not square")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (akk * ri[j] - aik * rk[j]) // prev
            ri[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


def _connected(mult, nv):
    seen = [False] * nv
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        row = mult[u]
        for w in range(nv):
            if row[w] and not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == nv


def _without_vertex(mult, v):
    return [[x for j, x in enumerate(row) if j != v] for i, row in enumerate(mult) if i != v]


def _dc(mult):
    nv = len(mult)
    if nv == 1:
        return 1
    if not _connected(mult, nv):
        return 0
    # pendant vertex: its k parallel edges form a bridge class, one of them is in every tree
    for v in range(nv):
        nbrs = [w for w in range(nv) if mult[v][w]]
        if len(nbrs) == 1:
            return mult[v][nbrs[0]] * _dc(_without_vertex(mult, v))
    for u in range(nv):
        for v in range(u + 1, nv):
            k = mult[u][v]
            if k:
                deleted = [row[:] for row in mult]
                deleted[u][v] = deleted[v][u] = 0
                # merge v into u; the other copies of uv become loops and are dropped
                merged = [row[:] for row in deleted]
                for w in range(nv):
                    merged[u][w] += merged[v][w]
                    merged[w][u] = merged[u][w]
                merged[u][u] = 0
                return _dc(deleted) + k * _dc(_without_vertex(merged, v))
    return 0


def dc_count(mult):
    """Spanning-tree count of a loopless multigraph by deletion-contraction.

    ``mult`` is the symmetric vertex-by-vertex edge multiplicity matrix with a
    zero diagonal. Parallel classes are handled as a unit: deleting all ``k``
    copies of ``uv`` versus contracting one of them, which gives
    ``t(G) = t(G - uv) + k * t(G / uv)``.
    """
    nv = len(mult)
    if nv == 0:
        return 1
    return _dc([list(r) for r in mult])
