import itertools
import random

import pytest

from oracles import brute_force_trees
from treekit.errors import EmbeddingError, GraphError, ParseError
from treekit.generators import complete_graph, grid_graph, random_planar_minor, wheel_graph
from treekit.multigraph import Multigraph
from treekit.planar import (
    PlanarEmbedding,
    dual,
    dual_embedding,
    euler_check,
    faces,
    format_embedded,
    parse_embedded,
    short_feature_exists,
    validate_embedding,
)
from treekit.treecount import count_matrix_tree

TRIANGLE = Multigraph(3, ((1, 2), (2, 3), (3, 1)))
TRIANGLE_EMB = PlanarEmbedding((((1, 1), (3, -1)), ((2, 1), (1, -1)), ((3, 1), (2, -1))))
THETA = Multigraph(2, ((1, 2),) * 3)
THETA_EMB = PlanarEmbedding((((1, 1), (2, 1), (3, 1)), ((3, -1), (2, -1), (1, -1))))
EDGE = Multigraph(2, ((1, 2),))
EDGE_EMB = PlanarEmbedding((((1, 1),), ((1, -1),)))


def test_faces_triangle():
    fs = faces(TRIANGLE, TRIANGLE_EMB)
    assert fs.lengths == [3, 3]
    assert fs.faces == (((1, 1), (2, 1), (3, 1)), ((1, -1), (3, -1), (2, -1)))


def test_faces_single_edge():
    assert faces(EDGE, EDGE_EMB).lengths == [2]


def test_faces_theta_hand_trace():
    fs = faces(THETA, THETA_EMB)
    assert fs.faces == (((1, 1), (3, -1)), ((1, -1), (2, 1)), ((2, -1), (3, 1)))


def test_faces_edgeless_point():
    assert faces(Multigraph(1, ()), PlanarEmbedding(((),))).lengths == [0]
    assert euler_check(Multigraph(1, ()), PlanarEmbedding(((),)))


def test_euler_examples():
    assert euler_check(TRIANGLE, TRIANGLE_EMB)
    assert euler_check(THETA, THETA_EMB)
    with pytest.raises(GraphError):
        euler_check(Multigraph(2, ()), PlanarEmbedding(((), ())))


def _k4_rotation_systems():
    K4 = complete_graph(4)
    darts = {v: [(e, 1 if a == v else -1) for e, (a, b) in enumerate(K4.edges, 1) if v in (a, b)] for v in range(1, 5)}
    # each degree-3 vertex has two cyclic orders
    choices = [[tuple(d), (d[0], d[2], d[1])] for d in darts.values()]
    for combo in itertools.product(*choices):
        yield K4, PlanarEmbedding(combo)


def test_k4_rotation_enumeration_has_planar_and_toroidal():
    verdicts = [euler_check(G, emb) for G, emb in _k4_rotation_systems()]
    assert len(verdicts) == 16
    assert any(verdicts) and not all(verdicts)
    G, emb = next((G, e) for G, e in _k4_rotation_systems() if not euler_check(G, e))
    assert len(faces(G, emb)) != G.n + 2 - G.m
    with pytest.raises(EmbeddingError):
        dual(G, emb)


def test_dual_examples():
    D, bij = dual(TRIANGLE, TRIANGLE_EMB)
    assert D == THETA and bij == {1: 1, 2: 2, 3: 3}
    assert dual(EDGE, EDGE_EMB)[0] == Multigraph(1, ((1, 1),))
    assert dual(THETA, THETA_EMB)[0] == Multigraph(3, ((1, 2), (2, 3), (3, 1)))


def test_loop_dualizes_to_bridge():
    G = Multigraph(1, ((1, 1),))
    emb = PlanarEmbedding((((1, 1), (1, -1)),))
    assert euler_check(G, emb)
    assert dual(G, emb)[0] == Multigraph(2, ((1, 2),)) or dual(G, emb)[0] == Multigraph(2, ((2, 1),))


def test_short_feature_examples():
    assert short_feature_exists(TRIANGLE, TRIANGLE_EMB)
    G, emb = grid_graph(4)
    assert short_feature_exists(G, emb)


def test_validation_errors():
    with pytest.raises(EmbeddingError):
        validate_embedding(TRIANGLE, PlanarEmbedding((((1, 1), (3, -1)), ((2, 1),), ((3, 1), (2, -1)))))
    with pytest.raises(EmbeddingError):
        validate_embedding(TRIANGLE, PlanarEmbedding((((1, -1), (3, -1)), ((2, 1), (1, 1)), ((3, 1), (2, -1)))))
    with pytest.raises(EmbeddingError):
        validate_embedding(TRIANGLE, PlanarEmbedding((((1, 1), (1, 1)), ((2, 1), (1, -1)), ((3, 1), (2, -1)))))
    with pytest.raises(EmbeddingError):
        validate_embedding(TRIANGLE, PlanarEmbedding((((1, 1), (3, -1)),)))


def test_parse_embedded(data_dir):
    G, emb = parse_embedded((data_dir / "theta.emb").read_text())
    assert G == THETA and emb == THETA_EMB
    assert parse_embedded(format_embedded(G, emb)) == (G, emb)
    with pytest.raises(ParseError):
        parse_embedded("2\n1\n1 2\n1+\n")
    with pytest.raises(ParseError):
        parse_embedded("2\n1\n1 2\n1+\n1*\n")


def embedded_corpus():
    rng = random.Random(7)
    out = [(TRIANGLE, TRIANGLE_EMB), (THETA, THETA_EMB), (EDGE, EDGE_EMB)]
    for k in range(1, 4):
        out.append(grid_graph(k))
    for s in range(3, 7):
        out.append(wheel_graph(s))
    for _ in range(40):
        G, emb = grid_graph(rng.randint(2, 3))
        out.append(random_planar_minor(rng, G, emb, rng.randint(1, G.n - 2)))
    return out


@pytest.mark.parametrize("G, emb", embedded_corpus())
def test_duality_invariants(G, emb):
    assert euler_check(G, emb)
    fs = faces(G, emb)
    assert sum(fs.lengths) == 2 * G.n == sum(G.degree(v) for v in range(1, G.m + 1))
    D, demb = dual_embedding(G, emb)
    assert D.n == G.n and D.m == len(fs)
    # degree of a dual vertex = boundary length of its face
    assert [D.degree(f) for f in range(1, D.m + 1)] == fs.lengths
    validate_embedding(D, demb)
    assert euler_check(D, demb)
    assert count_matrix_tree(D) == count_matrix_tree(G)
    if G.m <= 9 and G.n <= 14:
        assert brute_force_trees(D) == brute_force_trees(G)
    assert short_feature_exists(G, emb)
    # the dual of the dual has the original vertex count
    assert dual(D, demb)[0].m == G.m
