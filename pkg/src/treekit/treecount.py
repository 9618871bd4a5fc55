"""Spanning-tree counts and the certified tau**n complexity bound.

Disconnected graphs have ``t(G) = 0`` here; :func:`component_tree_product`
gives the product over components instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from treekit import kernels
from treekit.generators import grid_graph
from treekit.multigraph import Multigraph, components, induced_component, is_connected, remove_loops
from treekit.tau import INITIAL, TauInterval, tau_interval

# Catalan's constant, truncated to the 13 digits used as the reference line.
CATALAN = 0.9159655941772
GRID_ENTROPY_LIMIT = 2 * CATALAN / math.pi
TAU_STAR = math.exp(GRID_ENTROPY_LIMIT)

MAX_GRID_K = 8


def count_matrix_tree(G: Multigraph) -> int:
    """Determinant of the Laplacian with vertex 1's row and column removed."""
    if G.m <= 1:
        return 1
    if not is_connected(G):
        return 0
    lap = G.laplacian()
    minor = [row[1:] for row in lap[1:]]
    return kernels.det_bareiss(minor)


def count_deletion_contraction(G: Multigraph) -> int:
    """Exact count by deletion-contraction with loop, bridge and parallel-class reductions."""
    if G.m <= 1:
        return 1
    return kernels.dc_count(remove_loops(G).multiplicity_matrix())


def component_tree_product(G: Multigraph) -> int:
    prod = 1
    for comp in components(G):
        prod *= count_matrix_tree(induced_component(G, comp))
    return prod


@dataclass(frozen=True)
class BoundVerdict:
    holds: bool
    trees: int
    n: int
    lo: Fraction
    hi: Fraction

    @property
    def certificate(self) -> str:
        if self.holds:
            return f"t={self.trees} <= lo**{self.n}, lo={self.lo}"
        return f"t={self.trees} > hi**{self.n}, hi={self.hi}"


def check_tau_bound(G: Multigraph, iv: TauInterval | None = None, trees: int | None = None) -> BoundVerdict:
    """Certify ``t(G) <= tau**n`` (or its failure) with exact rational powers."""
    t = count_matrix_tree(G) if trees is None else trees
    n = G.n
    iv = iv or INITIAL
    while True:
        lo_pow, hi_pow = iv.lo**n, iv.hi**n
        if t <= lo_pow:
            return BoundVerdict(True, t, n, iv.lo, iv.hi)
        if t > hi_pow:
            return BoundVerdict(False, t, n, iv.lo, iv.hi)
        iv = iv.bisect()


@dataclass(frozen=True)
class GridEntropyRow:
    k: int
    n: int
    trees: int
    ratio: float
    limit: float = GRID_ENTROPY_LIMIT

    def tsv(self) -> str:
        return f"{self.k}\t{self.n}\t{self.trees}\t{self.ratio:.7f}\t{self.limit:.7f}"


GRID_TSV_HEADER = "k\tn\tt\tratio\tlimit_2C_over_pi"


def grid_entropy(k: int, max_k: int = MAX_GRID_K) -> GridEntropyRow:
    """``ln t(R_k) / n`` for the k x k cell grid, next to the limit ``2C/pi``."""
    if k > max_k:
        raise ValueError(f"grid size {k} exceeds the exact-counting cutoff {max_k}")
    G, _ = grid_graph(k)
    t = count_matrix_tree(G)
    return GridEntropyRow(k, G.n, t, math.log(t) / G.n)


__all__ = [
    "BoundVerdict",
    "CATALAN",
    "GRID_ENTROPY_LIMIT",
    "GridEntropyRow",
    "TAU_STAR",
    "check_tau_bound",
    "component_tree_product",
    "count_deletion_contraction",
    "count_matrix_tree",
    "grid_entropy",
    "grid_graph",
    "tau_interval",
]
