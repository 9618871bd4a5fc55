"""Rectangle dissections, squarings and their level networks.

Coordinates are integers with the origin at the top-left corner and ``y``
growing downward. A squaring's network has one vertex per level (maximal
horizontal segment made of tile sides) and one downward edge per tile,
weighted by the tile's side.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import reduce
from typing import Sequence

from treekit import kernels
from treekit.errors import DissectionError, ParseError
from treekit.kirchhoff import PoleChoice, build_edgewise_matrix, fundamental_cycle, sign_data, throughput
from treekit.multigraph import Multigraph, find_spanning_tree, is_connected
from treekit.tau import TAU_FLOAT, TauInterval, min_exponent, power_at_least


@dataclass(frozen=True)
class Rect:
    x: int
    y: int
    w: int
    h: int

    def __post_init__(self):
        if self.w < 1 or self.h < 1:
            raise DissectionError(f"tile {self} has a nonpositive dimension")
        if self.x < 0 or self.y < 0:
            raise DissectionError(f"tile {self} has a negative corner")

    @property
    def is_square(self) -> bool:
        return self.w == self.h

    @property
    def size(self) -> int:
        if not self.is_square:
            raise DissectionError(f"tile {self} is not a square")
        return self.w

    @property
    def max_side(self) -> int:
        return max(self.w, self.h)

    def area(self) -> int:
        return self.w * self.h


def gamma(R: Rect) -> int:
    return math.gcd(R.w, R.h)


def bias(R: Rect) -> int:
    """``max side / gcd(sides)``; equals 1 exactly for squares."""
    return R.max_side // gamma(R)


@dataclass(frozen=True)
class Dissection:
    W: int
    H: int
    tiles: tuple[Rect, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "tiles", tuple(self.tiles))
        if self.W < 1 or self.H < 1:
            raise DissectionError(f"rectangle {self.W}x{self.H} has a nonpositive dimension")

    @property
    def is_squaring(self) -> bool:
        return all(t.is_square for t in self.tiles)

    def transposed(self) -> "Dissection":
        return Dissection(self.H, self.W, tuple(Rect(t.y, t.x, t.h, t.w) for t in self.tiles))

    def scaled_down(self, d: int) -> "Dissection":
        return Dissection(self.W // d, self.H // d, tuple(Rect(t.x // d, t.y // d, t.w // d, t.h // d) for t in self.tiles))


def parse_dissection(text: str) -> Dissection:
    """``W H`` on the first line, then ``x y w h`` (or ``x y s`` for a square) per tile."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            rows.append((lineno, [int(t) for t in line.split()]))
        except ValueError:
            raise ParseError(f"line {lineno}: expected integers, got {line!r}") from None
    if not rows:
        raise ParseError("empty dissection file")
    lineno, head = rows[0]
    if len(head) != 2:
        raise ParseError(f"line {lineno}: expected 'W H'")
    if head[0] < 1 or head[1] < 1:
        raise ParseError(f"line {lineno}: nonpositive rectangle dimension")
    tiles = []
    for lineno, vals in rows[1:]:
        if len(vals) == 3:
            vals = vals + [vals[2]]
        if len(vals) != 4:
            raise ParseError(f"line {lineno}: expected 'x y w h' or 'x y s'")
        x, y, w, h = vals
        if w < 1 or h < 1 or x < 0 or y < 0:
            raise ParseError(f"line {lineno}: nonpositive tile dimension or negative corner")
        tiles.append(Rect(x, y, w, h))
    return Dissection(head[0], head[1], tuple(tiles))


def format_dissection(D: Dissection) -> str:
    lines = [f"{D.W} {D.H}"]
    for t in D.tiles:
        lines.append(f"{t.x} {t.y} {t.w}" if t.is_square else f"{t.x} {t.y} {t.w} {t.h}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Verdict:
    ok: bool
    problems: tuple[str, ...] = ()

    def __bool__(self):
        return self.ok


def validate_dissection(D: Dissection) -> Verdict:
    """Exact-cover check: each horizontal strip between consecutive tile edges is partitioned in x."""
    problems = []
    for i, t in enumerate(D.tiles):
        if t.x + t.w > D.W or t.y + t.h > D.H:
            problems.append(f"tile {i} at ({t.x},{t.y}) sticks out of the {D.W}x{D.H} rectangle")
    if problems:
        return Verdict(False, tuple(problems))
    ys = sorted({0, D.H} | {t.y for t in D.tiles} | {t.y + t.h for t in D.tiles})
    for y0, y1 in zip(ys, ys[1:]):
        spans = sorted((t.x, t.x + t.w, i) for i, t in enumerate(D.tiles) if t.y <= y0 and t.y + t.h >= y1)
        x = 0
        for x1, x2, i in spans:
            if x1 > x:
                problems.append(f"gap at x={x}..{x1}, y={y0}..{y1}")
            elif x1 < x:
                problems.append(f"overlap at x={x1}..{min(x, x2)}, y={y0}..{y1} (tile {i})")
            x = max(x, x2)
        if x < D.W:
            problems.append(f"gap at x={x}..{D.W}, y={y0}..{y1}")
        if problems:
            break
    area = sum(t.area() for t in D.tiles)
    if not problems and area != D.W * D.H:
        problems.append(f"tile area {area} differs from rectangle area {D.W * D.H}")
    return Verdict(not problems, tuple(problems))


@dataclass(frozen=True)
class Level:
    y: int
    x1: int
    x2: int

    def contains(self, y: int, x1: int, x2: int) -> bool:
        return y == self.y and self.x1 <= x1 and x2 <= self.x2


def levels(Q: Dissection) -> list[Level]:
    """Maximal horizontal segments formed by tile sides (plus the rectangle's top and bottom).

    Segments at the same height that overlap or touch are merged.
    """
    by_y: dict[int, list[tuple[int, int]]] = {0: [(0, Q.W)], Q.H: [(0, Q.W)]}
    for t in Q.tiles:
        by_y.setdefault(t.y, []).append((t.x, t.x + t.w))
        by_y.setdefault(t.y + t.h, []).append((t.x, t.x + t.w))
    out = []
    for y in sorted(by_y):
        cur = None
        for a, b in sorted(by_y[y]):
            if cur is not None and a <= cur[1]:
                cur[1] = max(cur[1], b)
            else:
                if cur is not None:
                    out.append(Level(y, cur[0], cur[1]))
                cur = [a, b]
        out.append(Level(y, cur[0], cur[1]))
    return out


@dataclass(frozen=True)
class SquaringNetwork:
    graph: Multigraph
    weights: tuple[int, ...]
    S: int
    T: int
    levels: tuple[Level, ...]
    squaring: Dissection
    rotated: bool = False

    @property
    def bottom(self) -> int:
        """Length N of the bottom side in the network's frame."""
        return self.squaring.W

    def tile_of_edge(self, e: int) -> Rect:
        return self.squaring.tiles[e - 1]

    def with_weights(self, weights: Sequence[int]) -> "SquaringNetwork":
        return replace(self, weights=tuple(weights))


def oriented(Q: Dissection) -> tuple[Dissection, bool]:
    """Rotate a portrait rectangle so its longer side is horizontal."""
    if Q.H > Q.W:
        return Q.transposed(), True
    return Q, False


def build_network(Q: Dissection, rotate_portrait: bool = False) -> SquaringNetwork:
    if not Q.is_squaring:
        raise DissectionError("network construction needs a squaring")
    rotated = False
    if rotate_portrait:
        Q, rotated = oriented(Q)
    lv = levels(Q)

    def find(y, x1, x2):
        for i, L in enumerate(lv, 1):
            if L.contains(y, x1, x2):
                return i
        raise DissectionError(f"side y={y}, x={x1}..{x2} lies in no level")

    edges = [(find(t.y, t.x, t.x + t.w), find(t.y + t.h, t.x, t.x + t.w)) for t in Q.tiles]
    G = Multigraph(len(lv), tuple(edges))
    S = find(0, 0, Q.W)
    T = find(Q.H, 0, Q.W)
    return SquaringNetwork(G, tuple(t.w for t in Q.tiles), S, T, tuple(lv), Q, rotated)


@dataclass(frozen=True)
class LawReport:
    ok: bool
    throughput: int
    violations: tuple[str, ...] = ()

    def __bool__(self):
        return self.ok


def verify_kirchhoff_laws(net: SquaringNetwork) -> LawReport:
    """Current law at inner levels, voltage law on fundamental cycles, throughput equal to N."""
    G, w = net.graph, net.weights
    bad = []
    for v in range(1, G.m + 1):
        if v in (net.S, net.T):
            continue
        flow = throughput(G, w, v)
        if flow:
            bad.append(f"current law fails at level {v}: net outflow {flow}")
    if G.n and is_connected(G):
        tree = find_spanning_tree(G)
        for e in range(1, G.n + 1):
            if e in tree:
                continue
            total = sum(s * w[f - 1] for f, s in fundamental_cycle(G, tree, e))
            if total:
                bad.append(f"voltage law fails on the cycle of edge {e}: signed sum {total}")
    elif not is_connected(G):
        bad.append("network is disconnected")
    out_s = throughput(G, w, net.S)
    into_t = -throughput(G, w, net.T)
    if out_s != net.bottom:
        bad.append(f"throughput {out_s} at S differs from bottom length {net.bottom}")
    if into_t != net.bottom:
        bad.append(f"inflow {into_t} at T differs from bottom length {net.bottom}")
    return LawReport(not bad, out_s, tuple(bad))


@dataclass(frozen=True)
class WidthSolution:
    widths: tuple[Fraction, ...]
    numerators: tuple[int, ...]
    trees: int
    N: int

    @property
    def quotients(self) -> tuple[int, ...]:
        """``b_e`` with ``a_e = N * b_e``."""
        return tuple(a // self.N for a in self.numerators)


def solve_widths(G: Multigraph, S: int, T: int, N: int) -> WidthSolution:
    """Solve the edgewise system with right side ``N`` at the current row of ``T``.

    Cramer's rule over exact integers: ``width_e = a_e / t(G)`` with
    ``t(G) = rho * det(M)`` and ``a_e = rho * det(M with column e replaced)``.
    The current row of ``T`` counts inflow negatively, so it carries ``-N``.
    """
    if not is_connected(G) or G.n < 1:
        raise DissectionError("width solve needs a connected network with edges")
    M = build_edgewise_matrix(G, PoleChoice(S, T))
    rho = sign_data(M, G).rho
    rhs = [0] * G.n
    rhs[M.rows.index(("vertex", T))] = -N
    D = kernels.det_bareiss(M.entries)
    if D == 0:
        raise DissectionError("edgewise system is singular")
    nums = []
    for e in range(G.n):
        cols = [list(r) for r in M.entries]
        for i, r in enumerate(cols):
            r[e] = rhs[i]
        nums.append(rho * kernels.det_bareiss(cols))
    t = rho * D
    return WidthSolution(tuple(Fraction(a, t) for a in nums), tuple(nums), t, N)


def network_widths(net: SquaringNetwork, N: int | None = None) -> WidthSolution:
    return solve_widths(net.graph, net.S, net.T, net.bottom if N is None else N)


def tile_gcd(D: Dissection) -> int:
    return reduce(math.gcd, (g for t in D.tiles for g in (t.w, t.h)), 0)


def prime_check(D: Dissection) -> tuple[bool, int]:
    d = tile_gcd(D)
    return d == 1, d


@dataclass(frozen=True)
class BoundReport:
    tiles: int
    sum_bias: int
    d: int
    max_side: int
    required: int
    holds: bool
    is_squaring: bool
    is_prime: bool
    interval: TauInterval

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.max_side, self.d)

    @property
    def log_tau(self) -> float:
        return math.log(self.ratio) / math.log(TAU_FLOAT)

    def line(self) -> str:
        status = "OK" if self.holds else "VIOLATED"
        if self.is_squaring and self.is_prime:
            return f"tiles={self.tiles} required>={self.required} {status}"
        return f"sum_bias={self.sum_bias} required>={self.required} {status}"


def check_bound(D: Dissection, iv: TauInterval | None = None) -> BoundReport:
    """Certify ``sum of biases >= log_tau(max(R) / d)`` as ``tau**sum >= max(R) / d``."""
    s = sum(bias(t) for t in D.tiles)
    d = tile_gcd(D)
    target = Fraction(max(D.W, D.H), d)
    required, iv = min_exponent(target, iv)
    holds, iv = power_at_least(s, target, iv)
    return BoundReport(len(D.tiles), s, d, max(D.W, D.H), required, holds, D.is_squaring, d == 1, iv)


def inverse_fibonacci_step(D: Dissection, k: int) -> Dissection:
    """Split tile ``k`` (0-based) into a maximal square at its near end plus the remainder.

    The square goes to position ``k`` and the remainder right after it.
    """
    t = D.tiles[k]
    if t.is_square:
        raise DissectionError(f"tile {k} is already a square")
    if t.w > t.h:
        sq, rest = Rect(t.x, t.y, t.h, t.h), Rect(t.x + t.h, t.y, t.w - t.h, t.h)
    else:
        sq, rest = Rect(t.x, t.y, t.w, t.w), Rect(t.x, t.y + t.w, t.w, t.h - t.w)
    return Dissection(D.W, D.H, D.tiles[:k] + (sq, rest) + D.tiles[k + 1 :])


def transform_to_squaring(D: Dissection, scale: bool = True) -> tuple[Dissection, bool]:
    """Split non-square tiles until all are squares, then divide by the tile gcd if asked.

    Returns the squaring and whether it was scaled down.
    """
    k = 0
    while k < len(D.tiles):
        if D.tiles[k].is_square:
            k += 1
        else:
            D = inverse_fibonacci_step(D, k)
    d = tile_gcd(D)
    if scale and d > 1:
        return D.scaled_down(d), True
    return D, False


def render_svg(D: Dissection, unit: int = 12, show_levels: bool = True) -> str:
    """SVG drawing: one labelled rect per tile and bold lines for levels."""
    pad = unit
    width, height = D.W * unit + 2 * pad, D.H * unit + 2 * pad
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="{pad}" y="{pad}" width="{D.W * unit}" height="{D.H * unit}" fill="white" stroke="black"/>',
    ]
    for t in D.tiles:
        x, y = pad + t.x * unit, pad + t.y * unit
        label = str(t.w) if t.is_square else f"{t.w}x{t.h}"
        fs = max(6, min(t.w, t.h) * unit // 3)
        out.append(
            f'<rect x="{x}" y="{y}" width="{t.w * unit}" height="{t.h * unit}" fill="#eef3fb" stroke="black"/>'
        )
        out.append(
            f'<text x="{x + t.w * unit / 2:g}" y="{y + t.h * unit / 2:g}" font-size="{fs}" '
            f'text-anchor="middle" dominant-baseline="central">{label}</text>'
        )
    if show_levels:
        for L in levels(D):
            y = pad + L.y * unit
            out.append(
                f'<polyline points="{pad + L.x1 * unit},{y} {pad + L.x2 * unit},{y}" '
                f'stroke="black" stroke-width="{max(3, unit // 3)}" fill="none"/>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"
