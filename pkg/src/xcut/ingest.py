"""Input parsing and graph construction from edge lists, images, and point clouds.

Formats:

* Edge lists: whitespace-separated ``u v`` or ``u v w`` lines, ``#`` starts a
  comment anywhere on a line, vertex ids are arbitrary nonnegative integers
  remapped densely by sorted original id.
* Images: ASCII PGM (magic ``P2``) or CSV matrices (one row per line); both
  yield row-major nonnegative intensities that are kept raw.
* Point clouds: CSV ``x,y`` or ``x,y,label`` rows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import BadGridError, LengthMismatchError, ParseError
from .graph import WeightedGraph, build_graph


@dataclass(frozen=True)
class GrayImage:
    width: int
    height: int
    intensities: tuple[float, ...]  # row-major, nonnegative


@dataclass(frozen=True)
class LabeledPoints:
    points: tuple[tuple[float, float], ...]
    labels: tuple[int, ...]


# == edge lists ==

def parse_edge_list(text: str) -> tuple[WeightedGraph, tuple[int, ...]]:
    """Parse an edge list; returns (graph, ids) with ids[new] = original id."""
    raw: list[tuple[int, int, float]] = []
    seen: set[int] = set()
    for lineno, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        parts = body.split()
        if len(parts) not in (2, 3):
            raise ParseError(f"expected 'u v' or 'u v w', got {body!r}", lineno)
        try:
            u = int(parts[0])
            v = int(parts[1])
            w = float(parts[2]) if len(parts) == 3 else 1.0
        except ValueError:
            raise ParseError(f"non-numeric token in {body!r}", lineno) from None
        if u < 0 or v < 0:
            raise ParseError(f"vertex ids must be nonnegative, got {body!r}", lineno)
        if not math.isfinite(w):
            raise ParseError(f"weight must be finite, got {body!r}", lineno)
        raw.append((u, v, w))
        seen.add(u)
        seen.add(v)
    ids = tuple(sorted(seen))
    pos = {old: new for new, old in enumerate(ids)}
    g = build_graph(len(ids), [(pos[u], pos[v], w) for u, v, w in raw])
    return g, ids


def emit_edge_list(g: WeightedGraph) -> str:
    return "".join(f"{u} {v} {w:.17g}\n" for u, v, w in g.edges)


def largest_component(g: WeightedGraph) -> WeightedGraph:
    """Induced subgraph on the largest component (smallest-id component on ties)."""
    comps = g.connected_components()
    if not comps:
        return g
    sub, _ = g.restrict(max(comps, key=len))
    return sub


# == images ==

def parse_pgm(text: str) -> GrayImage:
    """ASCII PGM (P2); '#' comments allowed; intensities kept as raw integers."""
    tokens: list[str] = []
    for line in text.splitlines():
        tokens.extend(line.split("#", 1)[0].split())
    if not tokens or tokens[0] != "P2":
        raise ParseError("not an ASCII PGM file (expected magic 'P2')", 1)
    if len(tokens) < 4:
        raise ParseError("truncated PGM header")
    try:
        width, height, maxval = int(tokens[1]), int(tokens[2]), int(tokens[3])
        pixels = [int(tok) for tok in tokens[4:]]
    except ValueError:
        raise ParseError("non-integer token in PGM data") from None
    if width < 1 or height < 1 or maxval < 1:
        raise ParseError(f"bad PGM dimensions {width}x{height} maxval {maxval}")
    if len(pixels) != width * height:
        raise ParseError(f"expected {width * height} pixels, got {len(pixels)}")
    if any(p < 0 or p > maxval for p in pixels):
        raise ParseError("pixel outside 0..maxval")
    return GrayImage(width, height, tuple(float(p) for p in pixels))


def parse_csv_image(text: str) -> GrayImage:
    """CSV matrix: one image row per line, comma-separated nonnegative reals."""
    rows: list[list[float]] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        try:
            row = [float(tok) for tok in body.split(",")]
        except ValueError:
            raise ParseError(f"non-numeric entry in {body!r}", lineno) from None
        if any(x < 0 or not math.isfinite(x) for x in row):
            raise ParseError("intensities must be finite and nonnegative", lineno)
        if rows and len(row) != len(rows[0]):
            raise ParseError(f"ragged row: {len(row)} != {len(rows[0])}", lineno)
        rows.append(row)
    if not rows:
        raise ParseError("empty image")
    flat = tuple(x for row in rows for x in row)
    return GrayImage(len(rows[0]), len(rows), flat)


_NEIGHBORS_8 = ((-1, -1), (-1, 0), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 0), (1, 1))


def image_grid_graph(img: GrayImage, r: int) -> tuple[WeightedGraph, frozenset[int]]:
    """Downsample to an r x r grid and connect 8-neighborhoods.

    Blocks are averaged, edge weight is the product of the endpoint
    intensities (zero products are non-edges, so zero-intensity cells end up
    isolated).  Also returns the intensity-maxima subset: cells whose value is
    >= every existing 8-neighbor's (ties allowed, so constant regions are all
    maxima).  Vertex id of cell (i, j) is i * r + j.
    """
    if r < 1 or r > min(img.width, img.height):
        raise BadGridError(f"grid size {r} not in 1..min({img.width}, {img.height})")
    a = np.asarray(img.intensities, dtype=float).reshape(img.height, img.width)
    row_starts = [(i * img.height) // r for i in range(r)]
    col_starts = [(j * img.width) // r for j in range(r)]
    sums = np.add.reduceat(np.add.reduceat(a, row_starts, axis=0), col_starts, axis=1)
    row_sizes = np.diff(row_starts + [img.height])
    col_sizes = np.diff(col_starts + [img.width])
    block = sums / np.outer(row_sizes, col_sizes)

    edges: list[tuple[int, int, float]] = []
    forward = ((0, 1), (1, -1), (1, 0), (1, 1))  # each undirected pair once
    for i in range(r):
        for j in range(r):
            for di, dj in forward:
                ni, nj = i + di, j + dj
                if 0 <= ni < r and 0 <= nj < r:
                    w = float(block[i, j] * block[ni, nj])
                    if w > 0.0:
                        edges.append((i * r + j, ni * r + nj, w))

    maxima: list[int] = []
    for i in range(r):
        for j in range(r):
            center = block[i, j]
            if all(not (0 <= i + di < r and 0 <= j + dj < r)
                   or block[i + di, j + dj] <= center
                   for di, dj in _NEIGHBORS_8):
                maxima.append(i * r + j)
    return build_graph(r * r, edges), frozenset(maxima)


# == point clouds ==

def parse_points_csv(text: str) -> tuple[list[tuple[float, float]], list[int] | None]:
    """Rows 'x,y' or 'x,y,label'; the label column must be all-or-none."""
    points: list[tuple[float, float]] = []
    labels: list[int] = []
    ncols: int | None = None
    for lineno, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        parts = body.split(",")
        if len(parts) not in (2, 3):
            raise ParseError(f"expected 'x,y' or 'x,y,label', got {body!r}", lineno)
        if ncols is None:
            ncols = len(parts)
        elif len(parts) != ncols:
            raise ParseError("inconsistent column count", lineno)
        try:
            x, y = float(parts[0]), float(parts[1])
            if len(parts) == 3:
                labels.append(int(parts[2]))
        except ValueError:
            raise ParseError(f"non-numeric entry in {body!r}", lineno) from None
        points.append((x, y))
    return points, (labels if ncols == 3 else None)


def write_points_csv(points: Sequence[tuple[float, float]],
                     labels: Sequence[int] | None = None) -> str:
    if labels is None:
        return "".join(f"{x:.17g},{y:.17g}\n" for x, y in points)
    if len(labels) != len(points):
        raise LengthMismatchError(f"{len(points)} points vs {len(labels)} labels")
    return "".join(f"{x:.17g},{y:.17g},{lab}\n"
                   for (x, y), lab in zip(points, labels))


def knn_eps_graph(points: Sequence[tuple[float, float]], k: int = 5,
                  eps: float = 0.2, scale: float = 0.2) -> WeightedGraph:
    """Symmetrized k-NN union eps-ball graph with weights exp(-distance / scale).

    An edge {u, v} exists iff u is among v's k nearest, v among u's, or their
    distance is at most eps.  Nearest-neighbor ties break by point index, so
    duplicate points are handled (their edge gets weight exp(0) = 1).
    """
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise ValueError("points must be an n x 2 array of coordinates")
    n = len(pts)
    if n < 2:
        raise ValueError(f"need at least 2 points, got {n}")
    diff = pts[:, None, :] - pts[None, :, :]
    dist = np.sqrt((diff * diff).sum(axis=2))

    pairs: set[tuple[int, int]] = set()
    limit = min(k, n - 1)
    for i in range(n):
        order = np.argsort(dist[i], kind="stable")
        picked = 0
        for j in order:
            j = int(j)
            if j == i:
                continue
            pairs.add((i, j) if i < j else (j, i))
            picked += 1
            if picked == limit:
                break
    iu, ju = np.triu_indices(n, 1)
    for i, j in zip(iu[dist[iu, ju] <= eps], ju[dist[iu, ju] <= eps]):
        pairs.add((int(i), int(j)))

    edges = [(u, v, math.exp(-dist[u, v] / scale)) for u, v in sorted(pairs)]
    return build_graph(n, edges)


def sample_gaussian_mixture(n: int, delta: float, seed: int) -> LabeledPoints:
    """Even mixture of N((0,0), I) and N((delta,delta), I) in the plane.

    Deterministic for a given seed: numpy's default_rng (PCG64) draws one
    block of n Bernoulli(1/2) component labels, then one (n, 2) block of
    standard normals, shifted by (delta, delta) where the label is 1.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if delta < 0:
        raise ValueError(f"need delta >= 0, got {delta}")
    rng = np.random.default_rng(seed)
    labels = rng.integers(0, 2, size=n)
    coords = rng.standard_normal((n, 2))
    coords[labels == 1] += float(delta)
    return LabeledPoints(tuple((float(x), float(y)) for x, y in coords),
                         tuple(int(b) for b in labels))


def classification_rate(labels_true: Sequence[int],
                        labels_pred: Sequence[int]) -> float:
    """Agreement between two binary labelings, maximized over label swap."""
    if len(labels_true) != len(labels_pred):
        raise LengthMismatchError(
            f"{len(labels_true)} true labels vs {len(labels_pred)} predicted")
    if not labels_true:
        raise ValueError("empty label vectors")
    agree = sum(1 for a, b in zip(labels_true, labels_pred) if a == b) / len(labels_true)
    return max(agree, 1.0 - agree)
