"""Greedy k-way partitioning by repeated pair-cut sweeps on subgraphs.

A slot holds a pending split: the two halves a cluster would break into and
the normalized cost of that break.  Each round commits the cheapest pending
split (lowest slot index on ties), then computes fresh pending splits for the
two new halves by running the sweep on their induced subgraphs.  Costs are
made comparable across subgraphs by multiplying with the subgraph's full-set
balancing term and dividing by the original graph's total ordered weight.

The slot array starts with the pseudo-split (emptyset, V) at cost 0, whose
commit leaves one permanently dead slot; the loop therefore runs until k
nonempty clusters exist and dead slots are dropped from the output.
Subgraphs with a single degree-maximal vertex fall back to the all-pairs
sweep; disconnected subgraphs split at cost 0 along a component, which the
greedy selection naturally prefers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .cuts import CutKind, CutResult, as_kind, balance_total
from .errors import DegenerateVlocError, TooManyClustersError, UnreachableKError
from .graph import WeightedGraph
from .xist import xist, xvst_basic


@dataclass(frozen=True)
class SplitStep:
    """One committed split: chosen slot, its cluster, the new halves and costs."""
    slot: int
    cluster: frozenset[int]
    halves: tuple[frozenset[int], frozenset[int]]
    half_costs: tuple[float, float]
    pending_costs: tuple[float, ...]
    clusters: tuple[frozenset[int], ...]


@dataclass
class MultiTrace:
    steps: list[SplitStep] = field(default_factory=list)


def multi_xist(g: WeightedGraph, kind: CutKind | str,
               k: int) -> tuple[list[frozenset[int]], MultiTrace]:
    """Split the graph into exactly k nonempty clusters, greedily by cut cost."""
    kind = as_kind(kind)
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    if k > g.n:
        raise TooManyClustersError(f"k={k} exceeds vertex count {g.n}")

    slots: list[tuple[frozenset[int], frozenset[int]]] = [
        (frozenset(), frozenset(range(g.n)))]
    costs: list[float] = [0.0]
    trace = MultiTrace()

    def clusters_now() -> list[frozenset[int]]:
        return [h1 | h2 for h1, h2 in slots if h1 or h2]

    while len(clusters_now()) < k:
        pending = tuple(costs)
        j = min(range(len(costs)), key=costs.__getitem__)  # lowest index on ties
        if math.isinf(costs[j]):
            raise UnreachableKError(
                f"no splittable cluster left before reaching k={k}", clusters_now())
        half_a, half_b = slots[j]
        entries: list[tuple[tuple[frozenset[int], frozenset[int]], float]] = []
        for part in (half_a, half_b):
            if len(part) <= 1:
                entries.append(((frozenset(), part), math.inf))
                continue
            sub, ids = g.restrict(part)
            result = _split_subgraph(sub, kind)
            cost = _comparable_cost(result.value, sub, kind, g.total_volume)
            side = frozenset(ids[v] for v in result.partition)
            entries.append(((side, part - side), cost))
        slots[j], costs[j] = entries[0]
        slots.append(entries[1][0])
        costs.append(entries[1][1])
        if half_a and half_b:  # skip the bootstrap pseudo-split of (emptyset, V)
            trace.steps.append(SplitStep(j, half_a | half_b, (half_a, half_b),
                                         (entries[0][1], entries[1][1]), pending,
                                         tuple(clusters_now())))
    return clusters_now(), trace


def _split_subgraph(sub: WeightedGraph, kind: CutKind) -> CutResult:
    try:
        result, _ = xist(sub, kind)
    except DegenerateVlocError:
        result, _ = xvst_basic(sub, kind)
    return result


def _comparable_cost(value: float, sub: WeightedGraph, kind: CutKind,
                     denominator: float) -> float:
    if value == 0.0:
        return 0.0
    if math.isinf(value) or denominator == 0.0:
        return math.inf
    return value * balance_total(sub, kind) / denominator


def cluster_labels(clusters: Sequence[frozenset[int]], n: int) -> list[int]:
    """Label vector 0..k-1, clusters numbered by their smallest member."""
    labels = [-1] * n
    for idx, cluster in enumerate(sorted(clusters, key=min)):
        for v in cluster:
            labels[v] = idx
    return labels
