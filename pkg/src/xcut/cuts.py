"""Balanced-cut functionals, their scale-free normalization, and the multiway sum.

A cut value is the crossing weight of a proper vertex subset divided by a
balancing term:

    mincut   1
    ratio    |S| * |S-complement|
    ncut     vol(S) * vol(S-complement)
    cheeger  min(vol(S), vol(S-complement))

A zero balancing term makes the value +inf by convention.  The normalized
variant multiplies by the same balancing term evaluated on (V, V) and divides
by the total ordered-pair weight, which makes ratio/ncut/cheeger (and mincut)
invariant under uniform weight scaling without moving any argmin.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DegeneratePartitionError, NotAPartitionError, ZeroBalanceError
from .graph import WeightedGraph


class CutKind(enum.Enum):
    MINCUT = "mincut"
    RATIO = "ratio"
    NCUT = "ncut"
    CHEEGER = "cheeger"


def as_kind(kind: CutKind | str) -> CutKind:
    """Accept either a CutKind or its string value ("ncut", "ratio", ...).

    The dispatch below compares enum identity, so a raw string must be
    converted here; CutKind("bogus") raises ValueError.
    """
    return kind if isinstance(kind, CutKind) else CutKind(kind)


@dataclass(frozen=True)
class CutResult:
    kind: CutKind
    value: float
    partition: frozenset[int]
    normalized_value: float


def _check_proper(g: WeightedGraph, s: frozenset[int]) -> None:
    if not s or len(s) >= g.n:
        raise DegeneratePartitionError(
            f"need a proper nonempty subset, got |S|={len(s)} of n={g.n}")


def cut_weight(g: WeightedGraph, s: Iterable[int]) -> float:
    """Total weight crossing the bipartition (S, V-S), each edge counted once.

    Iterates the graph's canonical edge order, so the result is bit-identical
    for S and its complement.
    """
    sset = frozenset(s)
    _check_proper(g, sset)
    return sum(w for u, v, w in g.edges if (u in sset) != (v in sset))


def balance(g: WeightedGraph, kind: CutKind | str, s: Iterable[int]) -> float:
    """Balancing term for the subset; raises ZeroBalanceError when it is 0."""
    kind = as_kind(kind)
    sset = frozenset(s)
    _check_proper(g, sset)
    if kind is CutKind.MINCUT:
        return 1.0
    if kind is CutKind.RATIO:
        return float(len(sset) * (g.n - len(sset)))
    vs = g.vol(sset)
    vc = g.vol(g.complement(sset))
    b = vs * vc if kind is CutKind.NCUT else min(vs, vc)
    if b == 0:
        raise ZeroBalanceError(f"{kind.value} balancing term is zero for |S|={len(sset)}")
    return b


def xcut_value(g: WeightedGraph, kind: CutKind, s: Iterable[int]) -> float:
    sset = frozenset(s)
    weight = cut_weight(g, sset)
    try:
        return weight / balance(g, kind, sset)
    except ZeroBalanceError:
        return math.inf


def balance_total(g: WeightedGraph, kind: CutKind | str) -> float:
    """The balancing term with both arguments the full vertex set."""
    kind = as_kind(kind)
    if kind is CutKind.MINCUT:
        return 1.0
    if kind is CutKind.RATIO:
        return float(g.n * g.n)
    if kind is CutKind.NCUT:
        return g.total_volume * g.total_volume
    return g.total_volume


def normalize_value(g: WeightedGraph, kind: CutKind, value: float) -> float:
    """Scale-free version of a raw cut value: value * balance_total / total volume."""
    if value == 0.0 or math.isinf(value) or math.isnan(value):
        return value
    return value * balance_total(g, kind) / g.total_volume


def normalized_xcut_value(g: WeightedGraph, kind: CutKind, s: Iterable[int]) -> float:
    return normalize_value(g, kind, xcut_value(g, kind, s))


def evaluate_cut(g: WeightedGraph, kind: CutKind | str, s: Iterable[int]) -> CutResult:
    kind = as_kind(kind)
    sset = frozenset(s)
    value = xcut_value(g, kind, sset)
    return CutResult(kind, value, sset, normalize_value(g, kind, value))


def multiway_xcut_value(g: WeightedGraph, kind: CutKind,
                        parts: Sequence[Iterable[int]]) -> float:
    """Half the sum of the parts' two-way cut values.

    ``parts`` must be pairwise disjoint, nonempty, and cover every vertex;
    with exactly two parts this reduces to the plain cut value of either.
    """
    clusters = [frozenset(p) for p in parts]
    if len(clusters) < 2:
        raise NotAPartitionError(f"need at least 2 parts, got {len(clusters)}")
    seen: set[int] = set()
    for c in clusters:
        if not c:
            raise NotAPartitionError("empty part")
        if seen & c:
            raise NotAPartitionError("parts overlap")
        seen |= c
    if seen != set(range(g.n)):
        raise NotAPartitionError("parts do not cover the vertex set")
    return 0.5 * sum(xcut_value(g, kind, c) for c in clusters)
