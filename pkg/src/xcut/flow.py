"""Exact st-max-flow / st-min-cut with a deterministic partition convention.

Dinic's blocking-flow algorithm on the residual network, iterative throughout
(no recursion), so it handles graphs far deeper than the interpreter stack.
Capacities are floats; residual capacities at or below ``RESIDUAL_EPS`` are
treated as zero to keep float dust from fabricating augmenting paths.

Partition convention: ``side_s`` is the set of vertices reachable from ``s``
in the final residual network.  For any maximum flow this is the unique
source-side-minimal minimum cut, so the result does not depend on edge input
order.  The reported cut value is recomputed from the graph's edge weights,
never read off the residual bookkeeping.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import SameVertexError
from .graph import WeightedGraph

RESIDUAL_EPS = 1e-12


@dataclass(frozen=True)
class StMinCut:
    value: float
    side_s: frozenset[int]


def st_min_cut(g: WeightedGraph, s: int, t: int) -> StMinCut:
    """Minimum-weight cut separating ``s`` from ``t``; ``s in side_s``.

    If ``s`` and ``t`` lie in different components the value is 0.0 and
    ``side_s`` is the component of ``s``.
    """
    _check_terminals(g, s, t)
    _, side = _dinic(g, s, t)
    value = sum(w for u, v, w in g.edges if (u in side) != (v in side))
    return StMinCut(value, side)


def max_flow_value(g: WeightedGraph, s: int, t: int) -> float:
    """Accumulated augmentation total; equals st_min_cut(g, s, t).value by duality."""
    _check_terminals(g, s, t)
    flow, _ = _dinic(g, s, t)
    return flow


def _check_terminals(g: WeightedGraph, s: int, t: int) -> None:
    g.check_vertex(s)
    g.check_vertex(t)
    if s == t:
        raise SameVertexError(f"source and sink must differ, both are {s}")


def _dinic(g: WeightedGraph, s: int, t: int) -> tuple[float, frozenset[int]]:
    n = g.n
    # Undirected edge -> paired arcs (a, a^1), each starting at capacity w.
    to: list[int] = []
    cap: list[float] = []
    arcs: list[list[int]] = [[] for _ in range(n)]
    for u, v, w in g.edges:
        arcs[u].append(len(to)); to.append(v); cap.append(w)
        arcs[v].append(len(to)); to.append(u); cap.append(w)

    total = 0.0
    while True:
        # BFS level graph over usable residual arcs.
        level = [-1] * n
        level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for a in arcs[u]:
                v = to[a]
                if cap[a] > RESIDUAL_EPS and level[v] < 0:
                    level[v] = level[u] + 1
                    queue.append(v)
        if level[t] < 0:
            break
        # Blocking flow: repeated advance/retreat walks with current-arc pointers.
        ptr = [0] * n
        while True:
            path: list[int] | None = []
            v = s
            while v != t:
                row = arcs[v]
                p = ptr[v]
                while p < len(row):
                    a = row[p]
                    if cap[a] > RESIDUAL_EPS and level[to[a]] == level[v] + 1:
                        break
                    p += 1
                ptr[v] = p
                if p < len(row):
                    path.append(row[p])
                    v = to[row[p]]
                else:
                    if v == s:
                        path = None
                        break
                    dead = path.pop()
                    v = to[dead ^ 1]  # tail of the arc we came through
                    ptr[v] += 1
            if path is None:
                break
            bottleneck = min(cap[a] for a in path)
            for a in path:
                cap[a] -= bottleneck
                cap[a ^ 1] += bottleneck
            total += bottleneck

    # side_s = residual reachability from s.
    seen = [False] * n
    seen[s] = True
    queue = deque([s])
    side = [s]
    while queue:
        u = queue.popleft()
        for a in arcs[u]:
            v = to[a]
            if not seen[v] and cap[a] > RESIDUAL_EPS:
                seen[v] = True
                side.append(v)
                queue.append(v)
    return total, frozenset(side)
