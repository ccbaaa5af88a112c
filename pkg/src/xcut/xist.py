"""Pair-cut sweeps over terminal vertex sets.

``xvst_basic`` evaluates the balanced-cut functional at the st-min-cut
partition of every unordered terminal pair and keeps the best.  ``xist``
reaches the same minimum over the locally degree-maximal vertices while
running only N - 1 max-flow calls for N terminals: it walks the pairs of a
Gusfield-style (uncontracted Gomory-Hu) construction, whose tau-tree
bottleneck covers a minimum cut for every terminal pair.

All entry points precheck connectivity and return the 0-value component cut
for disconnected input (a cut separating components costs 0 under every
balancing term).  Reported partitions are canonicalized to the side
containing vertex 0; the sweep itself works on raw source sides.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .cuts import CutKind, CutResult, as_kind, normalize_value, xcut_value
from .errors import DegenerateVlocError, SubsetTooSmallError
from .flow import st_min_cut
from .graph import WeightedGraph


@dataclass(frozen=True)
class SweepStep:
    """One st-min-cut evaluation: pair, cut value, functional value, tau snapshot."""
    index: int
    s: int
    t: int
    mincut_value: float
    xcut_value: float
    tau: tuple[int, ...] | None = None


@dataclass
class SweepTrace:
    subset: tuple[int, ...]
    steps: list[SweepStep] = field(default_factory=list)
    tau: tuple[int, ...] | None = None
    flow_calls: int = 0


def xvst_basic(g: WeightedGraph, kind: CutKind | str,
               subset: Iterable[int] | None = None) -> tuple[CutResult, SweepTrace]:
    """Best balanced cut over the st-min-cuts of every unordered terminal pair.

    ``subset`` defaults to all vertices.  Ties go to the lexicographically
    smallest (s, t) pair; the partition per pair is the source-side-minimal
    one with the smaller id as source.
    """
    kind = as_kind(kind)
    verts = sorted(set(subset)) if subset is not None else list(range(g.n))
    if len(verts) < 2:
        raise SubsetTooSmallError(f"need at least 2 terminals, got {len(verts)}")
    g.check_vertex(verts[0])
    g.check_vertex(verts[-1])
    if not g.is_connected():
        return _component_cut(g, kind)

    best_x = math.inf
    best_side: frozenset[int] | None = None
    steps: list[SweepStep] = []
    calls = 0
    for i, s in enumerate(verts):
        for t in verts[i + 1:]:
            cut = st_min_cut(g, s, t)
            calls += 1
            x = xcut_value(g, kind, cut.side_s)
            steps.append(SweepStep(calls, s, t, cut.value, x))
            if x < best_x:
                best_x = x
                best_side = cut.side_s
    result = CutResult(kind, best_x, _canonical(g, best_side),
                       normalize_value(g, kind, best_x))
    return result, SweepTrace(tuple(verts), steps, None, calls)


def xist(g: WeightedGraph, kind: CutKind | str) -> tuple[CutResult, SweepTrace]:
    """Sweep over the locally degree-maximal vertices with N - 1 flow calls.

    Raises DegenerateVlocError when fewer than two such vertices exist
    (callers can fall back to :func:`xvst_basic` on the full vertex set).
    """
    kind = as_kind(kind)
    if g.n == 0:
        raise DegenerateVlocError("empty graph")
    if not g.is_connected():
        return _component_cut(g, kind)
    vloc = g.local_maxima()
    if len(vloc) < 2:
        raise DegenerateVlocError(
            f"only {len(vloc)} locally degree-maximal vertex; no pair to sweep")
    return _gusfield_sweep(g, kind, vloc)


def xist_on_subset(g: WeightedGraph, kind: CutKind | str,
                   subset: Iterable[int]) -> tuple[CutResult, SweepTrace]:
    """The N - 1 call sweep over an arbitrary terminal subset (e.g. image maxima)."""
    kind = as_kind(kind)
    verts = sorted(set(subset))
    if len(verts) < 2:
        raise SubsetTooSmallError(f"need at least 2 terminals, got {len(verts)}")
    g.check_vertex(verts[0])
    g.check_vertex(verts[-1])
    if not g.is_connected():
        return _component_cut(g, kind)
    return _gusfield_sweep(g, kind, verts)


def _gusfield_sweep(g: WeightedGraph, kind: CutKind,
                    verts: list[int]) -> tuple[CutResult, SweepTrace]:
    count = len(verts)
    tau = [1] * (count + 1)  # 1-based into verts; tau[0] unused
    steps: list[SweepStep] = []
    best_x = math.inf
    best_side: frozenset[int] | None = None
    calls = 0
    for i in range(2, count + 1):
        s = verts[i - 1]
        t_idx = tau[i]
        t = verts[t_idx - 1]
        cut = st_min_cut(g, s, t)
        calls += 1
        x = xcut_value(g, kind, cut.side_s)
        if x < best_x:
            best_x = x
            best_side = cut.side_s
        # Reattach later terminals that shared this terminal's tree neighbor
        # and landed on the source side; tau[i] itself keeps recording t, and
        # nothing past step i rewrites it.
        side = cut.side_s
        for j in range(i + 1, count + 1):
            if tau[j] == t_idx and verts[j - 1] in side:
                tau[j] = i
        steps.append(SweepStep(i, s, t, cut.value, x, tuple(tau[1:])))
    result = CutResult(kind, best_x, _canonical(g, best_side),
                       normalize_value(g, kind, best_x))
    return result, SweepTrace(tuple(verts), steps, tuple(tau[1:]), calls)


def _component_cut(g: WeightedGraph, kind: CutKind) -> tuple[CutResult, SweepTrace]:
    # Disconnected input: separating components costs 0 for every kind.
    comp = g.connected_components()[0]
    return CutResult(kind, 0.0, comp, 0.0), SweepTrace((), [], None, 0)


def _canonical(g: WeightedGraph, side: frozenset[int]) -> frozenset[int]:
    return side if 0 in side else g.complement(side)


def tree_bottleneck(trace: SweepTrace, a: int, b: int) -> float:
    """Minimum recorded cut value on the final tau-tree path between two terminals.

    For every terminal pair this equals their exact st-min-cut value, which is
    what lets the sweep cover all pairs with N - 1 cuts.
    """
    adjacency: dict[int, list[tuple[int, float]]] = {v: [] for v in trace.subset}
    for step in trace.steps:
        adjacency[step.s].append((step.t, step.mincut_value))
        adjacency[step.t].append((step.s, step.mincut_value))
    prev: dict[int, int | None] = {a: None}
    via: dict[int, float] = {}
    queue = deque([a])
    while queue:
        u = queue.popleft()
        if u == b:
            break
        for v, val in adjacency[u]:
            if v not in prev:
                prev[v] = u
                via[v] = val
                queue.append(v)
    bottleneck = math.inf
    v = b
    while prev[v] is not None:
        bottleneck = min(bottleneck, via[v])
        v = prev[v]
    return bottleneck
