"""Benchmark timing and the matplotlib renderings behind the CLI report paths."""

from __future__ import annotations

import os
import time
from dataclasses import dataclass
from statistics import median
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .cuts import CutKind
from .ingest import GrayImage, image_grid_graph
from .xist import xist


@dataclass(frozen=True)
class BenchRow:
    r: int
    n: int
    m: int
    n_terminals: int
    seconds: float


def grid_bench(img: GrayImage, sizes: Sequence[int], kind: CutKind = CutKind.NCUT,
               repeats: int = 3) -> list[BenchRow]:
    """Median wall time of the degree-terminal sweep per grid size."""
    rows = []
    for r in sizes:
        g, _ = image_grid_graph(img, r)
        times = []
        for _ in range(max(1, repeats)):
            t0 = time.perf_counter()
            xist(g, kind)
            times.append(time.perf_counter() - t0)
        rows.append(BenchRow(r, g.n, g.m, len(g.local_maxima()), median(times)))
    return rows


def bench_csv_text(rows: Sequence[BenchRow]) -> str:
    lines = ["r,n,m,n_terminals,seconds"]
    lines += [f"{row.r},{row.n},{row.m},{row.n_terminals},{row.seconds:.9f}"
              for row in rows]
    return "\n".join(lines) + "\n"


def fit_loglog_slope(rows: Sequence[BenchRow]) -> float:
    xs = np.log([row.n for row in rows])
    ys = np.log([max(row.seconds, 1e-9) for row in rows])
    return float(np.polyfit(xs, ys, 1)[0])


def render_bench_figure(rows: Sequence[BenchRow], path) -> None:
    ns = [row.n for row in rows]
    secs = [max(row.seconds, 1e-9) for row in rows]
    slope = fit_loglog_slope(rows) if len(rows) >= 2 else 0.0
    fig, ax = plt.subplots(figsize=(5.5, 4.0))
    ax.loglog(ns, secs, "o-", color="tab:red", label="measured")
    if len(rows) >= 2:
        fitted = [secs[0] * (x / ns[0]) ** slope for x in ns]
        ax.loglog(ns, fitted, "--", color="gray", label=f"slope {slope:.2f}")
    ax.set_xlabel("vertices n")
    ax.set_ylabel("wall time (s)")
    ax.set_title("pair-sweep cut wall time on grid graphs")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    _save_atomic(fig, path)


def render_point_clusters(points: Sequence[tuple[float, float]],
                          labels: Sequence[int], path) -> None:
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    fig, ax = plt.subplots(figsize=(5.0, 5.0))
    ax.scatter(xs, ys, c=list(labels), cmap="tab10", s=14)
    ax.set_aspect("equal")
    ax.set_xlabel("x")
    ax.set_ylabel("y")
    ax.set_title("cluster assignment")
    _save_atomic(fig, path)


def _save_atomic(fig, path) -> None:
    path = os.fspath(path)
    tmp = path + ".tmp"
    fmt = os.path.splitext(path)[1].lstrip(".") or "png"
    fig.savefig(tmp, format=fmt, dpi=150, bbox_inches="tight")
    plt.close(fig)
    os.replace(tmp, path)
