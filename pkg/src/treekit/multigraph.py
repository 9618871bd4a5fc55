"""Indexed multigraphs with stored edge orientation.

Vertices are ``1..m`` and edges ``1..n``; an edge is a ``(tail, head)`` pair.
Loops (``tail == head``) and parallel edges are allowed. Every operation
returns a new graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from treekit.errors import GraphError, ParseError


@dataclass(frozen=True)
class Multigraph:
    m: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple((int(a), int(b)) for a, b in self.edges))
        if self.m < 0:
            raise GraphError(f"negative vertex count {self.m}")
        for i, (a, b) in enumerate(self.edges, 1):
            if not (1 <= a <= self.m and 1 <= b <= self.m):
                raise GraphError(f"edge {i} = ({a}, {b}) has an endpoint outside 1..{self.m}")

    @property
    def n(self) -> int:
        return len(self.edges)

    def edge(self, e: int) -> tuple[int, int]:
        _check_edge(self, e)
        return self.edges[e - 1]

    def is_loop(self, e: int) -> bool:
        a, b = self.edge(e)
        return a == b

    def incident(self, v: int) -> list[int]:
        """Edge ids touching ``v`` (a loop is listed once)."""
        return [i for i, (a, b) in enumerate(self.edges, 1) if a == v or b == v]

    def degree(self, v: int) -> int:
        """Number of edge ends at ``v``; a loop counts twice."""
        return sum((a == v) + (b == v) for a, b in self.edges)

    def multiplicity_matrix(self) -> list[list[int]]:
        """Symmetric 0-based matrix of non-loop edge multiplicities."""
        mult = [[0] * self.m for _ in range(self.m)]
        for a, b in self.edges:
            if a != b:
                mult[a - 1][b - 1] += 1
                mult[b - 1][a - 1] += 1
        return mult

    def laplacian(self) -> list[list[int]]:
        lap = [[-x for x in row] for row in self.multiplicity_matrix()]
        for i, row in enumerate(lap):
            row[i] = -sum(row)
        return lap


def _check_edge(G: Multigraph, e: int) -> None:
    if not 1 <= e <= G.n:
        raise GraphError(f"edge id {e} outside 1..{G.n}")


def parse_multigraph(text: str) -> Multigraph:
    """Parse the ``m / n / tail head ...`` text format ('#' starts a comment line)."""
    lines = _content_lines(text)
    G, rest = _parse_graph_block(lines)
    if rest:
        raise ParseError(f"line {rest[0][0]}: unexpected trailing content {rest[0][1]!r}")
    return G


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append((lineno, line))
    return out


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"line {lineno}: expected an integer, got {tok!r}") from None


def _parse_graph_block(lines):
    if len(lines) < 2:
        raise ParseError("expected vertex count and edge count lines")
    (l1, s1), (l2, s2) = lines[0], lines[1]
    if len(s1.split()) != 1 or len(s2.split()) != 1:
        raise ParseError(f"line {l1}: vertex and edge counts go on separate lines")
    m = _int(s1, l1)
    n = _int(s2, l2)
    if m < 1:
        raise ParseError(f"line {l1}: vertex count must be at least 1, got {m}")
    if n < 0:
        raise ParseError(f"line {l2}: negative edge count {n}")
    if len(lines) < 2 + n:
        raise ParseError(f"expected {n} edge lines, found {len(lines) - 2}")
    edges = []
    for lineno, line in lines[2 : 2 + n]:
        toks = line.split()
        if len(toks) != 2:
            raise ParseError(f"line {lineno}: expected 'tail head', got {line!r}")
        a, b = _int(toks[0], lineno), _int(toks[1], lineno)
        if not (1 <= a <= m and 1 <= b <= m):
            raise ParseError(f"line {lineno}: endpoint out of range 1..{m}")
        edges.append((a, b))
    return Multigraph(m, tuple(edges)), lines[2 + n :]


def format_multigraph(G: Multigraph) -> str:
    lines = [str(G.m), str(G.n)] + [f"{a} {b}" for a, b in G.edges]
    return "\n".join(lines) + "\n"


def delete_edge(G: Multigraph, e: int) -> Multigraph:
    _check_edge(G, e)
    return Multigraph(G.m, G.edges[: e - 1] + G.edges[e:])


def delete_edges(G: Multigraph, es: Iterable[int]) -> Multigraph:
    drop = set(es)
    for e in drop:
        _check_edge(G, e)
    return Multigraph(G.m, tuple(ed for i, ed in enumerate(G.edges, 1) if i not in drop))


def merge_map(m: int, keep: int, gone: int) -> list[int]:
    """Vertex relabelling (index 0 unused) after merging ``gone`` into ``keep``."""
    out = [0] * (m + 1)
    for v in range(1, m + 1):
        w = keep if v == gone else v
        out[v] = w - (w > gone)
    return out


def contract_edge(G: Multigraph, e: int) -> Multigraph:
    """Merge the endpoints of ``e`` and drop ``e``.

    The smaller endpoint survives and higher vertex indices shift down by one.
    Other edges between the two endpoints become loops and are kept.
    """
    a, b = G.edge(e)
    if a == b:
        raise GraphError(f"edge {e} is a loop and cannot be contracted")
    relabel = merge_map(G.m, min(a, b), max(a, b))
    edges = tuple((relabel[x], relabel[y]) for i, (x, y) in enumerate(G.edges, 1) if i != e)
    return Multigraph(G.m - 1, edges)


def remove_loops(G: Multigraph) -> Multigraph:
    return Multigraph(G.m, tuple((a, b) for a, b in G.edges if a != b))


def add_edge(G: Multigraph, tail: int, head: int) -> Multigraph:
    return Multigraph(G.m, G.edges + ((tail, head),))


class _DisjointSet:
    def __init__(self, size):
        self.parent = list(range(size))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        self.parent[max(rx, ry)] = min(rx, ry)
        return True


def components(G: Multigraph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    ds = _DisjointSet(G.m + 1)
    for a, b in G.edges:
        ds.union(a, b)
    groups: dict[int, list[int]] = {}
    for v in range(1, G.m + 1):
        groups.setdefault(ds.find(v), []).append(v)
    return sorted(groups.values())


def is_connected(G: Multigraph) -> bool:
    return len(components(G)) <= 1


def induced_component(G: Multigraph, vertices: Sequence[int]) -> Multigraph:
    """The subgraph on one component, relabelled to ``1..len(vertices)``."""
    index = {v: i for i, v in enumerate(vertices, 1)}
    edges = tuple((index[a], index[b]) for a, b in G.edges if a in index)
    return Multigraph(len(vertices), edges)


def find_spanning_tree(G: Multigraph, order: Iterable[int] | None = None) -> frozenset[int]:
    """Greedy union-find spanning tree over edges in ``order`` (default: index order)."""
    if G.m < 1:
        raise GraphError("graph has no vertices")
    ds = _DisjointSet(G.m + 1)
    tree = set()
    for e in order if order is not None else range(1, G.n + 1):
        a, b = G.edge(e)
        if ds.union(a, b):
            tree.add(e)
    if len(tree) != G.m - 1:
        raise GraphError("graph is disconnected; no spanning tree exists")
    return frozenset(tree)


def is_spanning_tree(G: Multigraph, tree: Iterable[int]) -> bool:
    tree = set(tree)
    if len(tree) != G.m - 1:
        return False
    ds = _DisjointSet(G.m + 1)
    for e in tree:
        if not 1 <= e <= G.n:
            return False
        a, b = G.edges[e - 1]
        if not ds.union(a, b):
            return False
    return True


def relabel_vertices(G: Multigraph, perm: Sequence[int]) -> Multigraph:
    """Rename vertex ``v`` to ``perm[v - 1]``; ``perm`` is a permutation of ``1..m``."""
    if sorted(perm) != list(range(1, G.m + 1)):
        raise GraphError("not a vertex permutation")
    return Multigraph(G.m, tuple((perm[a - 1], perm[b - 1]) for a, b in G.edges))


def reorder_edges(G: Multigraph, order: Sequence[int]) -> Multigraph:
    """New graph whose edge ``i`` is old edge ``order[i - 1]``."""
    if sorted(order) != list(range(1, G.n + 1)):
        raise GraphError("not an edge permutation")
    return Multigraph(G.m, tuple(G.edges[e - 1] for e in order))


def flip_edges(G: Multigraph, es: Iterable[int]) -> Multigraph:
    flip = set(es)
    return Multigraph(G.m, tuple((b, a) if i in flip else (a, b) for i, (a, b) in enumerate(G.edges, 1)))


def disjoint_union(G: Multigraph, H: Multigraph) -> Multigraph:
    shifted = tuple((a + G.m, b + G.m) for a, b in H.edges)
    return Multigraph(G.m + H.m, G.edges + shifted)
