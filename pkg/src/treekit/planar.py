"""Rotation systems, face tracing and planar duals.

A dart is ``(e, end)`` with ``end = +1`` for the tail end of edge ``e`` and
``-1`` for the head end; in files it is written ``e+`` / ``e-``. The rotation
at a vertex lists its darts in cyclic (counter-clockwise) order. Faces are the
orbits of ``d -> succ(reverse(d))``.

Embeddings are supplied, never searched for.
"""

from __future__ import annotations

from dataclasses import dataclass

from treekit.errors import EmbeddingError, GraphError, ParseError
from treekit.multigraph import (
    Multigraph,
    _content_lines,
    _parse_graph_block,
    contract_edge,
    delete_edge,
    format_multigraph,
    is_connected,
)

Dart = tuple[int, int]


def dart_str(d: Dart) -> str:
    return f"{d[0]}{'+' if d[1] > 0 else '-'}"


def parse_dart(tok: str) -> Dart:
    if len(tok) < 2 or tok[-1] not in "+-" or not tok[:-1].isdigit():
        raise ParseError(f"bad dart {tok!r}; expected e+ or e-")
    return int(tok[:-1]), 1 if tok[-1] == "+" else -1


@dataclass(frozen=True)
class PlanarEmbedding:
    rotations: tuple[tuple[Dart, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rotations", tuple(tuple((int(e), int(s)) for e, s in r) for r in self.rotations))

    def rotation(self, v: int) -> tuple[Dart, ...]:
        return self.rotations[v - 1]


@dataclass(frozen=True)
class FaceSet:
    faces: tuple[tuple[Dart, ...], ...]

    @property
    def lengths(self) -> list[int]:
        return [len(f) for f in self.faces]

    def __len__(self):
        return len(self.faces)

    def face_of(self) -> dict[Dart, int]:
        """Dart -> 0-based face index."""
        return {d: i for i, f in enumerate(self.faces) for d in f}


def dart_vertex(G: Multigraph, d: Dart) -> int:
    a, b = G.edge(d[0])
    return a if d[1] > 0 else b


def validate_embedding(G: Multigraph, emb: PlanarEmbedding) -> None:
    """Raise :class:`EmbeddingError` unless every dart of ``G`` sits once at its own vertex."""
    if len(emb.rotations) != G.m:
        raise EmbeddingError(f"embedding has {len(emb.rotations)} rotations for {G.m} vertices")
    seen = set()
    for v, rot in enumerate(emb.rotations, 1):
        for d in rot:
            e, s = d
            if not 1 <= e <= G.n or s not in (1, -1):
                raise EmbeddingError(f"vertex {v}: dart {dart_str(d)} does not name an edge end")
            if d in seen:
                raise EmbeddingError(f"dart {dart_str(d)} appears twice")
            if dart_vertex(G, d) != v:
                raise EmbeddingError(f"dart {dart_str(d)} belongs to vertex {dart_vertex(G, d)}, listed at {v}")
            seen.add(d)
    if len(seen) != 2 * G.n:
        missing = sorted({(e, s) for e in range(1, G.n + 1) for s in (1, -1)} - seen)
        raise EmbeddingError(f"rotation is not a permutation of the darts; missing {dart_str(missing[0])}")


def _successor(emb: PlanarEmbedding) -> dict[Dart, Dart]:
    succ = {}
    for rot in emb.rotations:
        for i, d in enumerate(rot):
            succ[d] = rot[(i + 1) % len(rot)]
    return succ


def faces(G: Multigraph, emb: PlanarEmbedding) -> FaceSet:
    validate_embedding(G, emb)
    if G.n == 0:
        return FaceSet(((),))
    succ = _successor(emb)
    used = set()
    out = []
    for e in range(1, G.n + 1):
        for s in (1, -1):
            start = (e, s)
            if start in used:
                continue
            walk = []
            d = start
            while d not in used:
                used.add(d)
                walk.append(d)
                d = succ[(d[0], -d[1])]
            out.append(tuple(walk))
    return FaceSet(tuple(out))


def euler_check(G: Multigraph, emb: PlanarEmbedding) -> bool:
    """True iff ``n + 2 == m + k`` (genus 0) for a connected embedded graph."""
    if not is_connected(G):
        raise GraphError("Euler check needs a connected graph")
    return G.n + 2 == G.m + len(faces(G, emb))


def _require_planar(G, emb):
    if not euler_check(G, emb):
        raise EmbeddingError("rotation system is not genus 0")


def dual(G: Multigraph, emb: PlanarEmbedding) -> tuple[Multigraph, dict[int, int]]:
    """Dual multigraph and the edge bijection (original id -> dual id).

    Dual edge ``e`` runs from the face holding dart ``e+`` to the face holding
    ``e-``, so a bridge becomes a loop and a loop becomes a bridge.
    """
    _require_planar(G, emb)
    fs = faces(G, emb)
    where = fs.face_of()
    edges = tuple((where[(e, 1)] + 1, where[(e, -1)] + 1) for e in range(1, G.n + 1))
    return Multigraph(len(fs), edges), {e: e for e in range(1, G.n + 1)}


def dual_embedding(G: Multigraph, emb: PlanarEmbedding) -> tuple[Multigraph, PlanarEmbedding]:
    """Dual graph with its induced rotation system (face walks become rotations)."""
    D, _ = dual(G, emb)
    return D, PlanarEmbedding(faces(G, emb).faces)


def short_feature_exists(G: Multigraph, emb: PlanarEmbedding) -> bool:
    """Some vertex has degree <= 3 or some face has at most 3 boundary edges."""
    _require_planar(G, emb)
    if any(G.degree(v) <= 3 for v in range(1, G.m + 1)):
        return True
    return any(length <= 3 for length in faces(G, emb).lengths)


def _shift(d: Dart, e: int) -> Dart:
    return (d[0] - (d[0] > e), d[1])


def delete_edge_embedded(G: Multigraph, emb: PlanarEmbedding, e: int) -> tuple[Multigraph, PlanarEmbedding]:
    H = delete_edge(G, e)
    rots = tuple(tuple(_shift(d, e) for d in rot if d[0] != e) for rot in emb.rotations)
    return H, PlanarEmbedding(rots)


def contract_edge_embedded(G: Multigraph, emb: PlanarEmbedding, e: int) -> tuple[Multigraph, PlanarEmbedding]:
    """Contract a non-loop edge, splicing the two rotations at the edge."""
    a, b = G.edge(e)
    H = contract_edge(G, e)

    def after(v, own):
        rot = emb.rotation(v)
        i = rot.index(own)
        return list(rot[i + 1 :] + rot[:i])

    merged = after(a, (e, 1)) + after(b, (e, -1))
    keep, gone = min(a, b), max(a, b)
    rots = []
    for v in range(1, G.m + 1):
        if v == gone:
            continue
        rot = merged if v == keep else list(emb.rotation(v))
        rots.append(tuple(_shift(d, e) for d in rot))
    return H, PlanarEmbedding(tuple(rots))


def parse_embedded(text: str) -> tuple[Multigraph, PlanarEmbedding]:
    """Multigraph block followed by one rotation line per vertex ('.' for none)."""
    lines = _content_lines(text)
    G, rest = _parse_graph_block(lines)
    if len(rest) != G.m:
        raise ParseError(f"expected {G.m} rotation lines after the edge list, found {len(rest)}")
    rots = []
    for lineno, line in rest:
        toks = line.split()
        try:
            rots.append(tuple(parse_dart(t) for t in toks if t != "."))
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    emb = PlanarEmbedding(tuple(rots))
    validate_embedding(G, emb)
    return G, emb


def format_embedded(G: Multigraph, emb: PlanarEmbedding) -> str:
    rot_lines = [" ".join(dart_str(d) for d in rot) or "." for rot in emb.rotations]
    return format_multigraph(G) + "\n".join(rot_lines) + "\n"

