"""Compare the compiled and pure-Python kernels on the same inputs.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import timeit

from treekit import _pykernels
from treekit.generators import complete_graph, grid_graph, random_multigraph

try:
    from treekit import _ckernels
except ImportError:
    _ckernels = None


def minor(G):
    lap = G.laplacian()
    return [row[1:] for row in lap[1:]]


def cases():
    rng = random.Random(1)
    corpus = [random_multigraph(rng, max_m=8, max_n=12) for _ in range(200)]
    mats = [G.multiplicity_matrix() for G in corpus]
    return [
        ("det grid k=4 (24x24)", "det_bareiss", [minor(grid_graph(4)[0])]),
        ("det grid k=7 (63x63)", "det_bareiss", [minor(grid_graph(7)[0])]),
        ("det K12 minor", "det_bareiss", [minor(complete_graph(12))]),
        ("dc 200 random multigraphs", "dc_count", mats),
        ("dc grid k=3", "dc_count", [grid_graph(3)[0].multiplicity_matrix()]),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled extension not built; only the Python kernels are timed")
    print(f"{'case':<28}{'python ms':>12}{'cython ms':>12}{'speedup':>10}")
    for name, fn, inputs in cases():
        py = getattr(_pykernels, fn)
        t_py = min(timeit.repeat(lambda: [py(x) for x in inputs], number=1, repeat=args.repeat)) * 1e3
        if _ckernels is None:
            print(f"{name:<28}{t_py:>12.2f}{'-':>12}{'-':>10}")
            continue
        cy = getattr(_ckernels, fn)
        assert [cy(x) for x in inputs] == [py(x) for x in inputs]
        t_cy = min(timeit.repeat(lambda: [cy(x) for x in inputs], number=1, repeat=args.repeat)) * 1e3
        print(f"{name:<28}{t_py:>12.2f}{t_cy:>12.2f}{t_py / t_cy:>9.1f}x")


if __name__ == "__main__":
    main()
