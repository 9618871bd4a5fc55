import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_force_trees, leibniz_det
from treekit import _pykernels, kernels
from treekit.generators import random_multigraph
from treekit.multigraph import remove_loops


def test_backend_is_reported():
    assert kernels.BACKEND in ("cython", "python")


@pytest.mark.parametrize(
    "M, expected",
    [
        ([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 1),
        ([[1, 1], [-1, 1]], 2),
        ([[3, -1, -1], [-1, 3, -1], [-1, -1, 3]], 16),  # K4 Laplacian minor
        ([], 1),
        ([[0, 1], [1, 0]], -1),
        ([[0, 0], [1, 1]], 0),
    ],
)
def test_det_examples(kernel, M, expected):
    assert kernel.det_bareiss(M) == expected


small_matrices = st.integers(1, 6).flatmap(
    lambda n: st.lists(st.lists(st.integers(-4, 4), min_size=n, max_size=n), min_size=n, max_size=n)
)


@settings(max_examples=200, deadline=None)
@given(small_matrices)
def test_det_matches_leibniz(M):
    expected = leibniz_det(M)
    assert _pykernels.det_bareiss(M) == expected
    assert kernels.det_bareiss(M) == expected


def test_det_big_entries_take_exact_path(kernel):
    rng = random.Random(5)
    M = [[rng.randint(-(10**25), 10**25) for _ in range(5)] for _ in range(5)]
    assert kernel.det_bareiss(M) == leibniz_det(M)


def test_det_rejects_ragged(kernel):
    with pytest.raises(ValueError):
        kernel.det_bareiss([[1, 2], [3]])


def test_det_does_not_mutate(kernel):
    M = [[0, 2], [3, 4]]
    kernel.det_bareiss(M)
    assert M == [[0, 2], [3, 4]]


@pytest.mark.parametrize(
    "mult, expected",
    [
        ([[0, 3], [3, 0]], 3),
        ([[0, 1, 1], [1, 0, 1], [1, 1, 0]], 3),
        ([[0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 0, 1], [1, 1, 1, 0]], 16),
        ([[0, 0], [0, 0]], 0),
        ([[0]], 1),
    ],
)
def test_dc_examples(kernel, mult, expected):
    assert kernel.dc_count(mult) == expected


def test_dc_matches_enumeration(kernel):
    rng = random.Random(11)
    for _ in range(150):
        G = random_multigraph(rng, max_m=7, max_n=11, connected=rng.random() < 0.8)
        mult = remove_loops(G).multiplicity_matrix()
        assert kernel.dc_count(mult) == brute_force_trees(G)


def test_dc_many_edges_falls_back_exactly(kernel):
    # 70 parallel edges: beyond the int64-safe limit of the compiled path
    assert kernel.dc_count([[0, 70], [70, 0]]) == 70
    # theta(40) + theta(40) in series: 1600 trees, 80 edges
    mult = [[0, 40, 0], [40, 0, 40], [0, 40, 0]]
    assert kernel.dc_count(mult) == 1600
