"""Command-line front end: cut, multicut, oracle, gen, bench.

Exit codes: 0 success, 1 data errors, 2 usage errors, 3 degenerate terminal
set (fewer than two sweep terminals; rerun with ``--subset all``).  Output
files are written atomically (temp file + rename).  Label files hold one
integer per line, one line per graph vertex; metrics are flat JSON objects
(see README for the key schema).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from .cuts import CutKind, multiway_xcut_value, normalize_value
from .errors import DegenerateVlocError, SubsetTooSmallError, XcutError
from .ingest import (
    image_grid_graph,
    knn_eps_graph,
    parse_csv_image,
    parse_edge_list,
    parse_pgm,
    parse_points_csv,
    sample_gaussian_mixture,
    write_points_csv,
)
from .multixist import cluster_labels, multi_xist
from .oracle import run_property_suite
from .xist import xist, xist_on_subset, xvst_basic

EXIT_OK = 0
EXIT_DATA = 1
EXIT_USAGE = 2
EXIT_DEGENERATE = 3


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except (DegenerateVlocError, SubsetTooSmallError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        print("hint: rerun with '--subset all' to sweep every vertex pair",
              file=sys.stderr)
        return EXIT_DEGENERATE
    except XcutError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


def main() -> None:
    raise SystemExit(run(sys.argv[1:]))


# == subcommands ==

def _cmd_cut(args) -> int:
    g, intensity_subset, _ = _load_graph(args)
    if g.n == 0:
        print("error: input graph has no vertices", file=sys.stderr)
        return EXIT_DATA
    kind = CutKind(args.cut)
    t0 = time.perf_counter()
    if args.subset == "all":
        algorithm = "all-pairs"
        result, trace = xvst_basic(g, kind)
    elif args.subset == "intensity":
        if args.format != "pgm":
            print("error: --subset intensity requires --format pgm", file=sys.stderr)
            return EXIT_USAGE
        algorithm = "sweep-intensity"
        result, trace = xist_on_subset(g, kind, intensity_subset)
    else:
        algorithm = "sweep-degree"
        result, trace = xist(g, kind)
    wall = time.perf_counter() - t0

    labels = cluster_labels([result.partition, g.complement(result.partition)], g.n)
    metrics = {
        "algorithm": algorithm,
        "cut": kind.value,
        "n": g.n,
        "m": g.m,
        "value": result.value,
        "normalized_value": result.normalized_value,
        "partition_size": len(result.partition),
        "partition_volume": g.vol(result.partition),
        "flow_calls": trace.flow_calls,
        "wall_time_s": wall,
    }
    _write_atomic(Path(args.labels), "".join(f"{x}\n" for x in labels))
    _write_atomic(Path(args.metrics), json.dumps(metrics, indent=2, sort_keys=True) + "\n")
    return EXIT_OK


def _cmd_multicut(args) -> int:
    g, _, points = _load_graph(args)
    if g.n == 0:
        print("error: input graph has no vertices", file=sys.stderr)
        return EXIT_DATA
    if args.figure and points is None:
        print("error: --figure needs --format csv-points", file=sys.stderr)
        return EXIT_USAGE
    kind = CutKind(args.cut)
    t0 = time.perf_counter()
    clusters, trace = multi_xist(g, kind, args.k)
    wall = time.perf_counter() - t0

    labels = cluster_labels(clusters, g.n)
    ordered = sorted(clusters, key=min)
    value = multiway_xcut_value(g, kind, ordered)
    metrics = {
        "algorithm": "greedy-multiway-sweep",
        "cut": kind.value,
        "k": args.k,
        "n": g.n,
        "m": g.m,
        "cluster_sizes": [len(c) for c in ordered],
        "multiway_value": value,
        "multiway_normalized_value": normalize_value(g, kind, value),
        "splits": len(trace.steps),
        "wall_time_s": wall,
    }
    _write_atomic(Path(args.labels), "".join(f"{x}\n" for x in labels))
    _write_atomic(Path(args.metrics), json.dumps(metrics, indent=2, sort_keys=True) + "\n")
    if args.figure:
        from .report import render_point_clusters

        render_point_clusters(points, labels, args.figure)
    return EXIT_OK


def _cmd_oracle(args) -> int:
    lines, violations = run_property_suite(max_n=args.max_n, trials=args.trials,
                                           seed=args.seed)
    for line in lines:
        print(line)
    if violations:
        print(f"FAILED: {violations} violations", file=sys.stderr)
        return EXIT_DATA
    print("all checks passed")
    return EXIT_OK


def _cmd_gen_gaussian(args) -> int:
    sample = sample_gaussian_mixture(args.n, args.delta, args.seed)
    _write_atomic(Path(args.out), write_points_csv(sample.points, sample.labels))
    return EXIT_OK


def _cmd_bench_grid(args) -> int:
    from .report import (
        bench_csv_text,
        fit_loglog_slope,
        grid_bench,
        render_bench_figure,
    )

    img = _load_image(Path(args.image))
    try:
        sizes = [int(tok) for tok in args.sizes.split(",") if tok.strip()]
    except ValueError:
        print(f"error: --sizes must be comma-separated integers, got {args.sizes!r}",
              file=sys.stderr)
        return EXIT_USAGE
    if not sizes:
        print("error: --sizes is empty", file=sys.stderr)
        return EXIT_USAGE
    rows = grid_bench(img, sizes, CutKind(args.cut), repeats=args.repeats)
    _write_atomic(Path(args.out), bench_csv_text(rows))
    figure = args.figure or str(Path(args.out).with_suffix(".png"))
    render_bench_figure(rows, figure)
    for row in rows:
        print(f"r={row.r} n={row.n} m={row.m} terminals={row.n_terminals} "
              f"seconds={row.seconds:.6f}")
    if len(rows) >= 2:
        print(f"log-log slope: {fit_loglog_slope(rows):.3f}")
    print(f"wrote {args.out} and {figure}")
    return EXIT_OK


# == helpers ==

def _load_graph(args):
    """Returns (graph, intensity-maxima subset or None, points or None)."""
    text = Path(args.input).read_text(encoding="utf-8")
    subset = None
    points = None
    if args.format == "edgelist":
        g, _ = parse_edge_list(text)
    elif args.format == "pgm":
        img = parse_pgm(text)
        r = args.grid or min(img.width, img.height, 128)
        g, subset = image_grid_graph(img, r)
    else:  # csv-points
        points, _ = parse_points_csv(text)
        g = knn_eps_graph(points, k=args.knn, eps=args.eps, scale=args.sigma)
    if args.largest_component:
        comp = max(g.connected_components(), key=len)
        g, ids = g.restrict(comp)
        if subset is not None:
            kept = set(subset)
            subset = frozenset(new for new, old in enumerate(ids) if old in kept)
    return g, subset, points


def _load_image(path: Path):
    text = path.read_text(encoding="utf-8")
    if path.suffix.lower() == ".pgm":
        return parse_pgm(text)
    return parse_csv_image(text)


def _write_atomic(path: Path, text: str) -> None:
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(text, encoding="utf-8")
    os.replace(tmp, path)


def _add_input_options(sp) -> None:
    sp.add_argument("--input", required=True, help="input file")
    sp.add_argument("--format", required=True,
                    choices=["edgelist", "pgm", "csv-points"])
    sp.add_argument("--cut", required=True,
                    choices=[kind.value for kind in CutKind])
    sp.add_argument("--largest-component", action="store_true",
                    help="restrict to the largest connected component first")
    sp.add_argument("--grid", type=int, default=None,
                    help="grid size r for pgm input (default min(width, height, 128))")
    sp.add_argument("--knn", type=int, default=5,
                    help="nearest-neighbor count for csv-points input")
    sp.add_argument("--eps", type=float, default=0.2,
                    help="ball radius for csv-points input")
    sp.add_argument("--sigma", type=float, default=0.2,
                    help="weight decay scale for csv-points input")
    sp.add_argument("--labels", required=True, help="output label file")
    sp.add_argument("--metrics", required=True, help="output metrics JSON")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="xcut",
        description="Balanced graph cuts approximated by st-min-cut sweeps")
    sub = parser.add_subparsers(dest="command", required=True)

    cut = sub.add_parser("cut", help="two-way balanced cut")
    _add_input_options(cut)
    cut.add_argument("--subset", choices=["degree", "intensity", "all"],
                     default="degree",
                     help="terminal set: degree maxima, image intensity maxima, "
                          "or every vertex pair")
    cut.set_defaults(func=_cmd_cut)

    mc = sub.add_parser("multicut", help="greedy k-way partition")
    _add_input_options(mc)
    mc.add_argument("--k", type=int, required=True, help="number of clusters")
    mc.add_argument("--figure", default=None,
                    help="render a cluster scatter PNG (csv-points input only)")
    mc.set_defaults(func=_cmd_multicut)

    orc = sub.add_parser("oracle", help="run the random-instance property suite")
    orc.add_argument("--max-n", type=int, default=14)
    orc.add_argument("--trials", type=int, default=25)
    orc.add_argument("--seed", type=int, default=0)
    orc.set_defaults(func=_cmd_oracle)

    gen = sub.add_parser("gen", help="generate synthetic inputs")
    gen_sub = gen.add_subparsers(dest="generator", required=True)
    gg = gen_sub.add_parser("gaussian", help="two-component Gaussian mixture points")
    gg.add_argument("--n", type=int, required=True)
    gg.add_argument("--delta", type=float, required=True)
    gg.add_argument("--seed", type=int, default=0)
    gg.add_argument("--out", required=True)
    gg.set_defaults(func=_cmd_gen_gaussian)

    bench = sub.add_parser("bench", help="timing studies")
    bench_sub = bench.add_subparsers(dest="study", required=True)
    bg = bench_sub.add_parser("grid", help="sweep wall time vs grid size")
    bg.add_argument("--image", required=True, help="PGM or CSV image file")
    bg.add_argument("--sizes", required=True, help="comma-separated grid sizes")
    bg.add_argument("--cut", default=CutKind.NCUT.value,
                    choices=[kind.value for kind in CutKind])
    bg.add_argument("--repeats", type=int, default=3)
    bg.add_argument("--out", required=True, help="output CSV")
    bg.add_argument("--figure", default=None,
                    help="output PNG (default: CSV path with .png suffix)")
    bg.set_defaults(func=_cmd_bench_grid)

    return parser


if __name__ == "__main__":
    main()
