"""Command-line entry point: ``treekit <subcommand> ...``.

Exit status is 0 on success, 1 when a verification fails (bound violated,
counts disagree, laws violated, invalid dissection) and 2 on input errors.
"""

from __future__ import annotations

import argparse
import math
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

from treekit import kernels
from treekit.errors import TreekitError
from treekit.kirchhoff import PoleChoice, eta_details, random_eta_draw
from treekit.multigraph import parse_multigraph
from treekit.planar import (
    dart_str,
    dual_embedding,
    euler_check,
    faces,
    format_embedded,
    parse_embedded,
    short_feature_exists,
)
from treekit.squaring import (
    build_network,
    check_bound,
    format_dissection,
    network_widths,
    parse_dissection,
    render_svg,
    transform_to_squaring,
    validate_dissection,
    verify_kirchhoff_laws,
)
from treekit.tau import INITIAL, TAU_FLOAT, tau_interval
from treekit.treecount import (
    GRID_TSV_HEADER,
    check_tau_bound,
    component_tree_product,
    count_deletion_contraction,
    count_matrix_tree,
    grid_entropy,
)

OK, FAILED, INPUT_ERROR = 0, 1, 2

METHODS = {
    "matrix": ("matrix_tree", count_matrix_tree),
    "dc": ("deletion_contraction", count_deletion_contraction),
    "eta": ("eta", lambda G: eta_details(G).value),
}


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise TreekitError(f"cannot read {path}: {exc.strerror}") from None


def _graph(path):
    text = _read(path)
    # embedded files carry extra rotation lines; the graph block is the same
    try:
        return parse_multigraph(text)
    except TreekitError:
        try:
            return parse_embedded(text)[0]
        except TreekitError:
            pass
        raise


def _interval(args):
    return tau_interval(args.tau_width) if args.tau_width is not None else INITIAL


def _count_file(path, methods):
    G = _graph(path)
    return [(METHODS[m][0], METHODS[m][1](G)) for m in methods]


def cmd_count(args):
    methods = list(METHODS) if args.method == "all" else [args.method]
    if args.jobs > 1 and len(args.files) > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_count_file, args.files, [methods] * len(args.files)))
    else:
        results = [_count_file(p, methods) for p in args.files]
    status = OK
    for path, rows in zip(args.files, results):
        prefix = f"{path}\t" if len(args.files) > 1 else ""
        for name, value in rows:
            print(f"{prefix}{name}\t{value}")
        if args.components:
            print(f"{prefix}component_product\t{component_tree_product(_graph(path))}")
        if len({v for _, v in rows}) > 1:
            print(f"{prefix}MISMATCH", file=sys.stderr)
            status = FAILED
    return status


def cmd_eta(args):
    G = _graph(args.file)
    poles = PoleChoice(*args.poles) if args.poles else None
    res = eta_details(G, poles=poles)
    print(f"eta\t{res.value}")
    if res.signs is not None:
        s = res.signs
        print(f"det\t{res.det}")
        print(f"p1\t{s.p1}\np2\t{s.p2}\np3\t{s.p3}\np4\t{s.p4}")
        print(f"sigma\t{s.sigma}\nlambda\t{s.lam}\nrho\t{s.rho}")
    if res.loops_removed:
        print(f"loops_removed\t{res.loops_removed}")
    if args.matrix and res.matrix is not None:
        sys.stdout.write(res.matrix.tsv())
    if args.draws:
        rng = random.Random(args.seed)
        values = [random_eta_draw(G, rng) for _ in range(args.draws)]
        same = all(v == res.value for v in values)
        print(f"draws\t{args.draws}\tseed\t{args.seed}\t{'invariant' if same else 'VARIES'}")
        if not same:
            return FAILED
    return OK


def cmd_bound(args):
    G = _graph(args.file)
    v = check_tau_bound(G, _interval(args))
    print(f"n\t{v.n}\nt\t{v.trees}")
    print(f"certificate\t{v.certificate}")
    print("holds" if v.holds else "VIOLATED")
    return OK if v.holds else FAILED


def cmd_dual(args):
    G, emb = parse_embedded(_read(args.file))
    D, demb = dual_embedding(G, emb)
    sys.stdout.write(format_embedded(D, demb))
    return OK


def cmd_faces(args):
    G, emb = parse_embedded(_read(args.file))
    fs = faces(G, emb)
    for i, f in enumerate(fs.faces, 1):
        print(f"face {i}\tlength {len(f)}\t" + " ".join(dart_str(d) for d in f))
    planar = euler_check(G, emb)
    print(f"m={G.m} n={G.n} k={len(fs)} euler={'ok' if planar else 'FAILS'}")
    if not planar:
        return FAILED
    print(f"short_feature\t{short_feature_exists(G, emb)}")
    return OK


def cmd_grid(args):
    ks = range(1, args.k + 1) if args.range else [args.k]
    print(GRID_TSV_HEADER)
    for k in ks:
        print(grid_entropy(k, max_k=args.max_k).tsv())
    return OK


def cmd_squaring(args):
    D = parse_dissection(_read(args.file))
    action = args.action
    verdict = validate_dissection(D)
    if action == "verify":
        print("valid" if verdict else "INVALID")
        for p in verdict.problems:
            print(p)
        if not verdict:
            return FAILED
        if D.is_squaring:
            report = verify_kirchhoff_laws(build_network(D))
            print(f"kirchhoff\t{'ok' if report else 'VIOLATED'}\tthroughput\t{report.throughput}")
            for v in report.violations:
                print(v)
            return OK if report else FAILED
        return OK
    if not verdict:
        print("INVALID dissection: " + verdict.problems[0], file=sys.stderr)
        return FAILED
    if action == "bound":
        rep = check_bound(D, _interval(args))
        print(rep.line())
        print(f"# sum_bias={rep.sum_bias} d={rep.d} max={rep.max_side}")
        print(f"# log_tau(max/d) ~ {rep.log_tau:.4f} = {1 / math.log2(TAU_FLOAT):.4f} * log2(max/d)")
        return OK if rep.holds else FAILED
    if action == "transform":
        Q, scaled = transform_to_squaring(D, scale=not args.no_scale)
        if scaled:
            print(f"# scaled down by {D.W // Q.W}")
        sys.stdout.write(format_dissection(Q))
        return OK
    if action == "render":
        svg = render_svg(D)
        if args.output:
            Path(args.output).write_text(svg, encoding="utf-8")
        else:
            sys.stdout.write(svg)
        return OK
    if not D.is_squaring:
        print("this action needs a squaring (all tiles square)", file=sys.stderr)
        return INPUT_ERROR
    net = build_network(D, rotate_portrait=True)
    if net.rotated:
        print("# portrait input rotated 90 degrees; levels refer to the rotated frame")
    if action == "levels":
        for i, L in enumerate(net.levels, 1):
            tag = " S" if i == net.S else " T" if i == net.T else ""
            print(f"{i}\ty={L.y}\tx={L.x1}..{L.x2}{tag}")
        return OK
    if action == "network":
        print(f"vertices\t{net.graph.m}\tedges\t{net.graph.n}\tS\t{net.S}\tT\t{net.T}")
        for e, ((a, b), w) in enumerate(zip(net.graph.edges, net.weights), 1):
            print(f"{e}\t{a}\t{b}\t{w}")
        return OK
    if action == "solve":
        N = args.n if args.n is not None else net.bottom
        sol = network_widths(net, N)
        print(f"N\t{N}\tt\t{sol.trees}")
        for e, (w, a) in enumerate(zip(sol.widths, sol.numerators), 1):
            print(f"{e}\t{w}\ta={a}")
        if N == net.bottom:
            match = list(sol.widths) == [Fraction(w) for w in net.weights]
            print("matches tiles" if match else "DOES NOT match tiles")
            return OK if match else FAILED
        return OK
    raise AssertionError(action)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="treekit", description=__doc__.splitlines()[0])
    p.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for multi-file commands")
    p.add_argument("--tau-width", type=Fraction, default=None, help="initial width of the tau interval")
    p.add_argument("--version", action="version", version=f"treekit ({kernels.BACKEND} kernels)")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="count spanning trees")
    c.add_argument("--method", choices=["all", *METHODS], default="all")
    c.add_argument("--components", action="store_true", help="also print the product over components")
    c.add_argument("files", nargs="+")
    c.set_defaults(func=cmd_count)

    e = sub.add_parser("eta", help="edgewise Kirchhoff determinant with sign breakdown")
    e.add_argument("file")
    e.add_argument("--poles", type=int, nargs=2, metavar=("S", "T"))
    e.add_argument("--matrix", action="store_true", help="print the matrix as TSV")
    e.add_argument("--draws", type=int, default=0, help="random invariance draws (uses --seed)")
    e.set_defaults(func=cmd_eta)

    b = sub.add_parser("bound", help="certify t(G) <= tau**n")
    b.add_argument("file")
    b.set_defaults(func=cmd_bound)

    d = sub.add_parser("dual", help="dual of an embedded graph")
    d.add_argument("file")
    d.set_defaults(func=cmd_dual)

    f = sub.add_parser("faces", help="faces of an embedded graph")
    f.add_argument("file")
    f.set_defaults(func=cmd_faces)

    g = sub.add_parser("grid", help="grid entropy report (TSV)")
    g.add_argument("k", type=int)
    g.add_argument("--range", action="store_true", help="report every size 1..k")
    g.add_argument("--max-k", type=int, default=8)
    g.set_defaults(func=cmd_grid)

    s = sub.add_parser("squaring", help="squared-rectangle pipeline")
    s.add_argument("action", choices=["verify", "levels", "network", "solve", "bound", "transform", "render"])
    s.add_argument("file")
    s.add_argument("--n", type=int, default=None, help="throughput for solve")
    s.add_argument("--no-scale", action="store_true", help="transform: keep the common factor")
    s.add_argument("-o", "--output", help="render: SVG output path")
    s.set_defaults(func=cmd_squaring)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (TreekitError, ValueError) as exc:
        print(f"treekit: error: {exc}", file=sys.stderr)
        return INPUT_ERROR


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
