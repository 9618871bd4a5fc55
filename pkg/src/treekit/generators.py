"""Small named graphs, embedded planar families and random corpora."""

from __future__ import annotations

import random

from treekit.multigraph import Multigraph, is_connected
from treekit.planar import PlanarEmbedding, contract_edge_embedded, delete_edge_embedded
from treekit.squaring import Dissection, Rect


def cycle_graph(length: int) -> Multigraph:
    return Multigraph(length, tuple((i, i % length + 1) for i in range(1, length + 1)))


def theta_graph(k: int = 3) -> Multigraph:
    return Multigraph(2, ((1, 2),) * k)


def complete_graph(m: int) -> Multigraph:
    return Multigraph(m, tuple((i, j) for i in range(1, m + 1) for j in range(i + 1, m + 1)))


def grid_graph(k: int) -> tuple[Multigraph, PlanarEmbedding]:
    """The k x k cell grid: (k+1)**2 vertices in row-major order, 2k(k+1) edges.

    Edges are generated per vertex in row-major order, first the edge to the
    right, then the edge downward; both point away from the vertex. Rotations
    list right, up, left, down (counter-clockwise with rows growing downward).
    """
    if k < 1:
        raise ValueError("grid size must be at least 1")
    side = k + 1

    def vid(r, c):
        return r * side + c + 1

    edges = []
    right, down = {}, {}
    for r in range(side):
        for c in range(side):
            if c < k:
                edges.append((vid(r, c), vid(r, c + 1)))
                right[r, c] = len(edges)
            if r < k:
                edges.append((vid(r, c), vid(r + 1, c)))
                down[r, c] = len(edges)
    rots = []
    for r in range(side):
        for c in range(side):
            rot = []
            if c < k:
                rot.append((right[r, c], 1))
            if r > 0:
                rot.append((down[r - 1, c], -1))
            if c > 0:
                rot.append((right[r, c - 1], -1))
            if r < k:
                rot.append((down[r, c], 1))
            rots.append(tuple(rot))
    return Multigraph(side * side, tuple(edges)), PlanarEmbedding(tuple(rots))


def wheel_graph(spokes: int) -> tuple[Multigraph, PlanarEmbedding]:
    """Hub 1 joined to a rim cycle 2..spokes+1; spokes are edges 1..s, rim edges s+1..2s."""
    if spokes < 3:
        raise ValueError("a wheel needs at least 3 spokes")
    s = spokes
    edges = [(1, i + 1) for i in range(1, s + 1)]
    edges += [(i + 1, i % s + 2) for i in range(1, s + 1)]
    rots = [tuple((i, 1) for i in range(1, s + 1))]
    for i in range(1, s + 1):
        prev = s if i == 1 else i - 1
        rots.append(((s + i, 1), (i, -1), (s + prev, -1)))
    return Multigraph(s + 1, tuple(edges)), PlanarEmbedding(tuple(rots))


def random_multigraph(rng: random.Random, max_m: int = 8, max_n: int = 12, connected: bool = True) -> Multigraph:
    """Random multigraph with loops and parallel edges; a random spanning tree first when ``connected``."""
    while True:
        m = rng.randint(1, max_m)
        lo = m - 1 if connected else 0
        n = rng.randint(lo, max(lo, max_n))
        edges = []
        if connected:
            for v in range(2, m + 1):
                edges.append((v, rng.randint(1, v - 1)))
        while len(edges) < n:
            roll = rng.random()
            if roll < 0.12:
                v = rng.randint(1, m)
                edges.append((v, v))
            elif roll < 0.35 and edges:
                a, b = rng.choice(edges)
                edges.append((b, a) if rng.random() < 0.5 else (a, b))
            else:
                edges.append((rng.randint(1, m), rng.randint(1, m)))
        rng.shuffle(edges)
        perm = list(range(1, m + 1))
        rng.shuffle(perm)
        edges = [(perm[a - 1], perm[b - 1]) if rng.random() < 0.5 else (perm[b - 1], perm[a - 1]) for a, b in edges]
        G = Multigraph(m, tuple(edges))
        if not connected or is_connected(G):
            return G


def random_planar_minor(
    rng: random.Random, G: Multigraph, emb: PlanarEmbedding, steps: int
) -> tuple[Multigraph, PlanarEmbedding]:
    """Apply ``steps`` random embedded deletions/contractions, keeping the graph connected."""
    for _ in range(steps):
        if G.n == 0:
            break
        e = rng.randint(1, G.n)
        a, b = G.edge(e)
        if a == b:
            G, emb = delete_edge_embedded(G, emb, e)
        elif rng.random() < 0.5:
            H, hemb = delete_edge_embedded(G, emb, e)
            if is_connected(H):
                G, emb = H, hemb
            else:
                G, emb = contract_edge_embedded(G, emb, e)
        else:
            G, emb = contract_edge_embedded(G, emb, e)
    return G, emb


def random_guillotine(rng: random.Random, W: int, H: int, tiles: int) -> Dissection:
    """Random guillotine dissection of ``W x H`` with up to ``tiles`` tiles (integer cuts)."""
    rects = [Rect(0, 0, W, H)]
    for _ in range(tiles - 1):
        cuttable = [i for i, r in enumerate(rects) if r.w > 1 or r.h > 1]
        if not cuttable:
            break
        i = rng.choice(cuttable)
        r = rects[i]
        vertical = r.w > 1 and (r.h == 1 or rng.random() < 0.5)
        if vertical:
            c = rng.randint(1, r.w - 1)
            parts = [Rect(r.x, r.y, c, r.h), Rect(r.x + c, r.y, r.w - c, r.h)]
        else:
            c = rng.randint(1, r.h - 1)
            parts = [Rect(r.x, r.y, r.w, c), Rect(r.x, r.y + c, r.w, r.h - c)]
        rects[i : i + 1] = parts
    rng.shuffle(rects)
    return Dissection(W, H, tuple(rects))
