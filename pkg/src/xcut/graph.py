"""Immutable weighted undirected graphs and their degree/volume primitives.

Graphs are simple: no self-loops, at most one edge per unordered vertex pair,
strictly positive weights.  Duplicate input edges are merged by summing their
weights, self-loops are dropped (counted), and zero-weight pairs are treated
as non-edges.  All derived data (adjacency, degrees, volumes) is precomputed
at construction, and every operation is pure, so instances can be shared
freely.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

from .errors import (
    EmptySetError,
    NegativeWeightError,
    NonPositiveScaleError,
    VertexOutOfRangeError,
)

Edge = tuple[int, int, float]


class WeightedGraph:
    """Adjacency-list graph over vertices 0..n-1, immutable after construction.

    ``edges`` stores each undirected edge once as ``(u, v, w)`` with ``u < v``,
    sorted; ``adjacency[v]`` lists ``(neighbor, weight)`` sorted by neighbor id.
    ``total_volume`` is the ordered-pair weight sum, i.e. twice the total edge
    weight.  Use :func:`build_graph` to construct validated instances.
    """

    __slots__ = ("n", "edges", "adjacency", "degrees", "total_volume", "self_loops_dropped")

    def __init__(self, n: int, edges: tuple[Edge, ...], self_loops_dropped: int = 0):
        self.n = n
        self.edges = edges
        adj: list[list[tuple[int, float]]] = [[] for _ in range(n)]
        for u, v, w in edges:
            adj[u].append((v, w))
            adj[v].append((u, w))
        self.adjacency = tuple(tuple(sorted(nbrs)) for nbrs in adj)
        self.degrees = tuple(sum(w for _, w in nbrs) for nbrs in self.adjacency)
        self.total_volume = sum(self.degrees)
        self.self_loops_dropped = self_loops_dropped

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def total_edge_weight(self) -> float:
        return sum(w for _, _, w in self.edges)

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexOutOfRangeError(f"vertex {v} not in 0..{self.n - 1}")

    def degree(self, v: int) -> float:
        """Weighted degree: sum of incident edge weights (0.0 for isolated vertices)."""
        self.check_vertex(v)
        return self.degrees[v]

    def neighbors(self, v: int) -> tuple[tuple[int, float], ...]:
        self.check_vertex(v)
        return self.adjacency[v]

    def vol(self, s: Iterable[int]) -> float:
        """Volume of a vertex set: sum of weighted degrees over its members."""
        ids = sorted(s)
        if ids and (ids[0] < 0 or ids[-1] >= self.n):
            raise VertexOutOfRangeError(f"vertex set not within 0..{self.n - 1}")
        return sum(self.degrees[v] for v in ids)

    def complement(self, s: Iterable[int]) -> frozenset[int]:
        return frozenset(range(self.n)) - frozenset(s)

    def local_maxima(self) -> list[int]:
        """Vertices whose weighted degree is >= every neighbor's, ascending.

        Ties count, so plateaus contribute all their vertices; isolated
        vertices qualify vacuously.  Nonempty for every nonempty graph.
        """
        deg = self.degrees
        return [u for u in range(self.n)
                if all(deg[u] >= deg[v] for v, _ in self.adjacency[u])]

    def connected_components(self) -> list[frozenset[int]]:
        """Components ordered by their smallest contained vertex id."""
        seen = [False] * self.n
        out: list[frozenset[int]] = []
        for start in range(self.n):
            if seen[start]:
                continue
            comp = [start]
            seen[start] = True
            queue = deque([start])
            while queue:
                u = queue.popleft()
                for v, _ in self.adjacency[u]:
                    if not seen[v]:
                        seen[v] = True
                        comp.append(v)
                        queue.append(v)
            out.append(frozenset(comp))
        return out

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = [False] * self.n
        seen[0] = True
        queue = deque([0])
        count = 1
        while queue:
            u = queue.popleft()
            for v, _ in self.adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    count += 1
                    queue.append(v)
        return count == self.n

    def restrict(self, s: Iterable[int]) -> tuple["WeightedGraph", tuple[int, ...]]:
        """Induced subgraph on ``s``, re-indexed 0..|s|-1.

        Returns ``(subgraph, ids)`` where ``ids[new] = old`` maps the new
        vertex ids back to this graph's ids (ascending).
        """
        sset = frozenset(s)
        if not sset:
            raise EmptySetError("cannot restrict to an empty vertex set")
        ids = tuple(sorted(sset))
        if ids[0] < 0 or ids[-1] >= self.n:
            raise VertexOutOfRangeError(f"vertex set not within 0..{self.n - 1}")
        pos = {old: new for new, old in enumerate(ids)}
        sub_edges = [(pos[u], pos[v], w) for u, v, w in self.edges
                     if u in sset and v in sset]
        return build_graph(len(ids), sub_edges), ids

    def scale_weights(self, c: float) -> "WeightedGraph":
        if c <= 0:
            raise NonPositiveScaleError(f"scale factor must be positive, got {c}")
        return build_graph(self.n, [(u, v, w * c) for u, v, w in self.edges])

    def __repr__(self) -> str:
        return f"WeightedGraph(n={self.n}, m={self.m})"


def build_graph(n: int, edge_list: Sequence[tuple[int, int, float]]) -> WeightedGraph:
    """Validate and normalize an edge list into a :class:`WeightedGraph`.

    Duplicate unordered pairs are merged by summing weights, self-loops are
    dropped (the count is kept on ``self_loops_dropped``), and zero-weight
    entries are discarded.  Negative weights and out-of-range vertex ids
    raise.
    """
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    merged: dict[tuple[int, int], float] = {}
    self_loops = 0
    for u, v, w in edge_list:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRangeError(f"edge ({u}, {v}) outside 0..{n - 1}")
        if w < 0:
            raise NegativeWeightError(f"edge ({u}, {v}) has negative weight {w}")
        if u == v:
            self_loops += 1
            continue
        if w == 0:
            continue
        key = (u, v) if u < v else (v, u)
        merged[key] = merged.get(key, 0.0) + float(w)
    edges = tuple(sorted((u, v, w) for (u, v), w in merged.items()))
    return WeightedGraph(n, edges, self_loops_dropped=self_loops)
