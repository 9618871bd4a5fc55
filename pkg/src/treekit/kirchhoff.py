"""Edgewise Kirchhoff matrices and the signed determinant eta(G).

The matrix has one column per edge (its weight variable) and two kinds of
rows:

* current rows, one per vertex ``u != S``: ``+1`` for each non-loop edge whose
  stored orientation leaves ``u``, ``-1`` for each that enters it;
* cycle rows, one per edge ``e`` outside the spanning tree ``F``: the
  fundamental cycle of ``e`` traversed in ``e``'s direction, ``+1`` for
  co-oriented edges and ``-1`` for counter-oriented ones.

Current rows come first in vertex order, then cycle rows in the order given
(edge order by default). ``eta = rho * det`` where the sign ``rho`` is
assembled from four parities; with the defaults ``eta(G)`` is the number of
spanning trees of a connected ``G``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from treekit import kernels
from treekit.errors import GraphError
from treekit.multigraph import (
    Multigraph,
    find_spanning_tree,
    flip_edges,
    is_connected,
    is_spanning_tree,
    relabel_vertices,
    reorder_edges,
)

# Tree-edge label used by the sign of F: 1 when e_v points into v (away from
# the pole S). Fixed by requiring eta(single edge) = +1; the opposite choice
# shifts p1 by m - 1 and so negates eta whenever m is even.
LABEL_ONE_WHEN_INTO_V = True


@dataclass(frozen=True)
class PoleChoice:
    S: int
    T: int

    @classmethod
    def default(cls, G: Multigraph) -> "PoleChoice":
        return cls(1, G.m)

    def validate(self, G: Multigraph) -> None:
        if not (1 <= self.S <= G.m and 1 <= self.T <= G.m):
            raise GraphError(f"poles {self.S}, {self.T} outside 1..{G.m}")
        if G.m >= 2 and self.S == self.T:
            raise GraphError("poles must differ")


@dataclass(frozen=True)
class EdgewiseMatrix:
    entries: tuple[tuple[int, ...], ...]
    rows: tuple[tuple[str, int], ...]
    poles: PoleChoice
    tree: frozenset[int]

    @property
    def n(self) -> int:
        return len(self.entries)

    def row(self, kind: str, label: int) -> tuple[int, ...]:
        return self.entries[self.rows.index((kind, label))]

    def tsv(self) -> str:
        head = "row\t" + "\t".join(f"w{e}" for e in range(1, self.n + 1))
        body = [f"{kind[0]}{label}\t" + "\t".join(str(x) for x in r) for (kind, label), r in zip(self.rows, self.entries)]
        return "\n".join([head] + body) + "\n"


@dataclass(frozen=True)
class SignData:
    p1: int
    p2: int
    p3: int
    p4: int

    @property
    def sigma(self) -> int:
        return -1 if (self.p1 + self.p2 + self.p3) % 2 else 1

    @property
    def lam(self) -> int:
        return -1 if self.p4 % 2 else 1

    @property
    def rho(self) -> int:
        return self.sigma * self.lam


def permutation_parity(seq: Sequence[int]) -> int:
    """Parity (0 even, 1 odd) of the ranking of distinct numbers in ``seq``."""
    ranks = {x: i for i, x in enumerate(sorted(seq))}
    perm = [ranks[x] for x in seq]
    seen = [False] * len(perm)
    parity = 0
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        parity ^= (length - 1) & 1
    return parity


def _tree_parents(G: Multigraph, tree: Iterable[int], root: int) -> dict[int, tuple[int, int]]:
    """BFS over tree edges from ``root``: vertex -> (parent vertex, edge to parent)."""
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in range(1, G.m + 1)}
    for e in tree:
        a, b = G.edge(e)
        adj[a].append((b, e))
        adj[b].append((a, e))
    parent = {root: (0, 0)}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w, e in adj[u]:
            if w not in parent:
                parent[w] = (u, e)
                queue.append(w)
    return parent


def fundamental_cycle(G: Multigraph, tree: Iterable[int], e: int) -> list[tuple[int, int]]:
    """``(edge, ±1)`` pairs of the cycle of ``e`` in ``F + e``, walked along ``e``'s orientation."""
    tree = frozenset(tree)
    if e in tree:
        raise GraphError(f"edge {e} is a tree edge")
    a, b = G.edge(e)
    cycle = [(e, 1)]
    if a == b:
        return cycle
    parent = _tree_parents(G, tree, a)
    x = b
    while x != a:
        p, f = parent[x]
        cycle.append((f, 1 if G.edges[f - 1] == (x, p) else -1))
        x = p
    return cycle


def build_edgewise_matrix(
    G: Multigraph,
    poles: PoleChoice | None = None,
    tree: Iterable[int] | None = None,
    cycle_order: Sequence[int] | None = None,
) -> EdgewiseMatrix:
    if G.n < 1:
        raise GraphError("edgewise matrix needs at least one edge")
    if not is_connected(G):
        raise GraphError("edgewise matrix needs a connected graph")
    poles = poles or PoleChoice.default(G)
    poles.validate(G)
    tree = find_spanning_tree(G) if tree is None else frozenset(tree)
    if not is_spanning_tree(G, tree):
        raise GraphError("F is not a spanning tree")
    cotree = [e for e in range(1, G.n + 1) if e not in tree]
    if cycle_order is None:
        cycle_order = cotree
    elif sorted(cycle_order) != cotree:
        raise GraphError("cycle row order must list every non-tree edge once")

    rows, labels = [], []
    for u in range(1, G.m + 1):
        if u == poles.S:
            continue
        r = [0] * G.n
        for i, (a, b) in enumerate(G.edges):
            if a != b:
                r[i] = 1 if a == u else -1 if b == u else 0
        rows.append(tuple(r))
        labels.append(("vertex", u))
    for e in cycle_order:
        r = [0] * G.n
        for f, s in fundamental_cycle(G, tree, e):
            r[f - 1] = s
        rows.append(tuple(r))
        labels.append(("cycle", e))
    return EdgewiseMatrix(tuple(rows), tuple(labels), poles, tree)


def sign_sigma(G: Multigraph, tree: Iterable[int], S: int) -> tuple[int, int, int]:
    """Parities ``(p1, p2, p3)`` defining the sign of spanning tree ``F`` with pole ``S``."""
    tree = frozenset(tree)
    parent = _tree_parents(G, tree, S)
    verts = [v for v in range(1, G.m + 1) if v != S]
    tree_edges = sorted(tree)
    position = {e: j for j, e in enumerate(tree_edges, 1)}
    p1 = 0
    alpha = []
    for v in verts:
        _, ev = parent[v]
        into_v = G.edges[ev - 1][1] == v
        p1 += 1 if into_v == LABEL_ONE_WHEN_INTO_V else 0
        alpha.append(position[ev])
    p3 = sum(b + j for j, b in enumerate(tree_edges, 1))
    return p1 % 2, permutation_parity(alpha), p3 % 2


def sign_data(M: EdgewiseMatrix, G: Multigraph) -> SignData:
    p1, p2, p3 = sign_sigma(G, M.tree, M.poles.S)
    cycle_cols = [label for kind, label in M.rows if kind == "cycle"]
    return SignData(p1, p2, p3, permutation_parity(cycle_cols))


def det_exact(rows: Sequence[Sequence[int]]) -> int:
    return kernels.det_bareiss(rows)


@dataclass(frozen=True)
class EtaResult:
    value: int
    det: int | None = None
    signs: SignData | None = None
    matrix: EdgewiseMatrix | None = None
    loops_removed: int = 0


def _loop_free(G: Multigraph) -> tuple[Multigraph, dict[int, int]]:
    keep = [i for i, (a, b) in enumerate(G.edges, 1) if a != b]
    index = {old: new for new, old in enumerate(keep, 1)}
    return Multigraph(G.m, tuple(G.edges[i - 1] for i in keep)), index


def eta_details(
    G: Multigraph,
    poles: PoleChoice | None = None,
    tree: Iterable[int] | None = None,
    cycle_order: Sequence[int] | None = None,
) -> EtaResult:
    """eta(G) with its determinant and sign breakdown.

    ``tree`` and ``cycle_order`` use the edge ids of ``G``; loops are dropped
    before the matrix is built, so they may not appear in either.
    """
    H, index = _loop_free(G)
    dropped = G.n - H.n
    if not is_connected(H):
        return EtaResult(0, loops_removed=dropped)
    if H.n == 0:
        return EtaResult(1, loops_removed=dropped)

    def remap(es):
        try:
            return [index[e] for e in es]
        except KeyError as exc:
            raise GraphError(f"edge {exc.args[0]} is a loop or out of range") from None

    if tree is not None:
        tree = remap(tree)
    if cycle_order is not None:
        cycle_order = remap(cycle_order)
    M = build_edgewise_matrix(H, poles, tree, cycle_order)
    signs = sign_data(M, H)
    d = det_exact(M.entries)
    return EtaResult(signs.rho * d, d, signs, M, dropped)


def eta(G: Multigraph, **choices) -> int:
    """eta(G): 0 if disconnected, 1 with no (non-loop) edges, else rho * det."""
    return eta_details(G, **choices).value


def throughput(G: Multigraph, weights: Sequence, S: int):
    """Net weight leaving pole ``S`` under the stored orientations."""
    total = 0
    for (a, b), w in zip(G.edges, weights):
        if a == b:
            continue
        if a == S:
            total += w
        elif b == S:
            total -= w
    return total


def evaluate_rows(M: EdgewiseMatrix, weights: Sequence) -> list:
    """Each row of ``M`` dotted with ``weights``."""
    return [sum(x * w for x, w in zip(r, weights)) for r in M.entries]


def random_eta_draw(G: Multigraph, rng) -> int:
    """eta after a random vertex relabelling, edge reordering, orientation flips,
    pole pair, spanning tree and cycle-row order."""
    H = relabel_vertices(G, rng.sample(range(1, G.m + 1), G.m))
    H = reorder_edges(H, rng.sample(range(1, H.n + 1), H.n))
    H = flip_edges(H, [e for e in range(1, H.n + 1) if rng.random() < 0.5])
    if not is_connected(H):
        return eta(H)
    proper = [e for e in range(1, H.n + 1) if not H.is_loop(e)]
    if not proper:
        return eta(H)
    rng.shuffle(proper)
    tree = find_spanning_tree(H, proper)
    cotree = [e for e in proper if e not in tree]
    rng.shuffle(cotree)
    S, T = rng.sample(range(1, H.m + 1), 2)
    return eta(H, poles=PoleChoice(S, T), tree=tree, cycle_order=cotree)
