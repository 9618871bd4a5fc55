"""Independent oracles: brute force, enumeration and textbook formulas.

Nothing here calls the kernels or the counting code under test.
"""

import itertools
from fractions import Fraction


def brute_force_trees(G):
    """Count (m-1)-edge subsets that form a forest spanning all m vertices."""
    if G.m <= 1:
        return 1
    edges = [(a, b) for a, b in G.edges if a != b]
    count = 0
    for subset in itertools.combinations(range(len(edges)), G.m - 1):
        parent = list(range(G.m + 1))

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        ok = True
        for i in subset:
            a, b = edges[i]
            ra, rb = find(a), find(b)
            if ra == rb:
                ok = False
                break
            parent[ra] = rb
        count += ok
    return count


def leibniz_det(M):
    n = len(M)
    total = 0
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inversions % 2 else 1
        for i, j in enumerate(perm):
            term *= M[i][j]
            if not term:
                break
        total += term
    return total


def gauss_solve(A, b):
    """Plain Fraction Gauss-Jordan with row pivoting."""
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(A, b)]
    for c in range(n):
        p = next(r for r in range(c, n) if M[r][c] != 0)
        M[c], M[p] = M[p], M[c]
        for r in range(n):
            if r != c and M[r][c]:
                f = M[r][c] / M[c][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return [M[i][n] / M[i][i] for i in range(n)]


def euclid_quotients(a, b):
    qs = []
    while b:
        qs.append(a // b)
        a, b = b, a % b
    return qs


def greedy_forest(edges, m):
    """Lowest-index-first spanning forest, by repeated reachability checks."""
    chosen = []
    for i, (a, b) in enumerate(edges, 1):
        reach = {a}
        frontier = [a]
        while frontier:
            x = frontier.pop()
            for j in chosen:
                u, v = edges[j - 1]
                for s, t in ((u, v), (v, u)):
                    if s == x and t not in reach:
                        reach.add(t)
                        frontier.append(t)
        if b not in reach:
            chosen.append(i)
    return set(chosen)
