"""Exhaustive small-instance baselines and executable cut-structure checks.

Everything here trades speed for independence: subset enumeration over
bitmasks (capped at 16 vertices) gives ground truth the sweep algorithms can
be compared against, and the checker functions turn structural facts about
st-min-cuts (path inequality, non-unique three-cut minimum, non-crossing
intersections) into booleans over concrete instances.
"""

from __future__ import annotations

import math
import random
from typing import Sequence

from .cuts import CutKind, CutResult, as_kind, normalize_value
from .errors import (
    PreconditionViolatedError,
    SameVertexError,
    TooLargeError,
)
from .flow import max_flow_value, st_min_cut
from .graph import WeightedGraph, build_graph
from .xist import tree_bottleneck, xist, xvst_basic

ENUM_MAX_N = 16
_TOL = 1e-9


def subset_cut_data(g: WeightedGraph) -> tuple[list[float], list[float]]:
    """Crossing weight and volume of every vertex subset, indexed by bitmask.

    Built incrementally from each mask's lowest set bit, so the whole table
    costs O(2^n * max degree).
    """
    n = g.n
    if n > ENUM_MAX_N:
        raise TooLargeError(f"enumeration capped at n={ENUM_MAX_N}, got {n}")
    size = 1 << n
    cw = [0.0] * size
    vol = [0.0] * size
    deg = g.degrees
    nbr_bits = [[(1 << v, w) for v, w in g.adjacency[u]] for u in range(n)]
    for mask in range(1, size):
        low = mask & -mask
        v = low.bit_length() - 1
        prev = mask ^ low
        inside = 0.0
        for bit, w in nbr_bits[v]:
            if prev & bit:
                inside += w
        cw[mask] = cw[prev] + deg[v] - 2.0 * inside
        vol[mask] = vol[prev] + deg[v]
    return cw, vol


def exact_xcut(g: WeightedGraph, kind: CutKind | str) -> CutResult:
    """Global minimum of the functional by enumerating all proper subsets.

    Vertex 0 is fixed on the S side (the functional is complement-symmetric);
    ties go to the smallest bitmask.
    """
    kind = as_kind(kind)
    n = g.n
    if not 2 <= n <= ENUM_MAX_N:
        raise TooLargeError(f"need 2 <= n <= {ENUM_MAX_N}, got {n}")
    cw, vol = subset_cut_data(g)
    full = (1 << n) - 1
    total = vol[full]
    best = math.inf
    best_mask = 0
    for rest in range(1 << (n - 1)):
        mask = (rest << 1) | 1
        if mask == full:
            continue
        if kind is CutKind.MINCUT:
            bal = 1.0
        elif kind is CutKind.RATIO:
            size_s = mask.bit_count()
            bal = float(size_s * (n - size_s))
        else:
            vs = vol[mask]
            vc = total - vs
            bal = vs * vc if kind is CutKind.NCUT else min(vs, vc)
        if bal <= 0.0:
            continue
        value = cw[mask] / bal
        if value < best:
            best = value
            best_mask = mask
    part = frozenset(v for v in range(n) if best_mask >> v & 1)
    return CutResult(kind, best, part, normalize_value(g, kind, best))


def enumerate_st_mincuts(g: WeightedGraph, s: int,
                         t: int) -> tuple[float, list[frozenset[int]]]:
    """Minimal st-cut weight and every attaining subset (s in S, t not in S)."""
    if g.n > ENUM_MAX_N:
        raise TooLargeError(f"enumeration capped at n={ENUM_MAX_N}, got {g.n}")
    g.check_vertex(s)
    g.check_vertex(t)
    if s == t:
        raise SameVertexError(f"source and sink must differ, both are {s}")
    cw, _ = subset_cut_data(g)
    sbit, tbit = 1 << s, 1 << t
    best = math.inf
    for mask in range(1 << g.n):
        if mask & sbit and not mask & tbit and cw[mask] < best:
            best = cw[mask]
    sets = [frozenset(v for v in range(g.n) if mask >> v & 1)
            for mask in range(1 << g.n)
            if mask & sbit and not mask & tbit and cw[mask] <= best + _TOL]
    return best, sets


def check_path_inequality(g: WeightedGraph, seq: Sequence[int]) -> bool:
    """Along any vertex sequence, c(first, last) >= min over consecutive c values."""
    if len(seq) < 2 or seq[0] == seq[-1]:
        raise ValueError("need a sequence of length >= 2 with distinct endpoints")
    for a, b in zip(seq, seq[1:]):
        if a == b:
            raise ValueError("consecutive vertices must be distinct")
    ends = st_min_cut(g, seq[0], seq[-1]).value
    smallest = min(st_min_cut(g, a, b).value for a, b in zip(seq, seq[1:]))
    return ends >= smallest - _TOL


def check_three_cut_nonuniqueness(g: WeightedGraph, s: int, t: int, v: int) -> bool:
    """Of the three pairwise st-min-cut values, the minimum is attained twice."""
    if len({s, t, v}) != 3:
        raise ValueError("need three distinct vertices")
    vals = sorted((st_min_cut(g, s, t).value,
                   st_min_cut(g, s, v).value,
                   st_min_cut(g, t, v).value))
    return vals[1] - vals[0] <= _TOL


def check_noncrossing(g: WeightedGraph, s: int, t: int, u: int, v: int) -> bool:
    """Some uv-min-cut does not cross the st-min-cut's source side.

    With u, v inside side_s of the st cut, either side_s intersected with a
    uv-min-cut side or with its complement must itself attain the uv-min-cut
    value.  Verified against the exhaustive enumeration of attaining sets.
    """
    if len({s, t, u, v}) != 4:
        raise PreconditionViolatedError("s, t, u, v must be pairwise distinct")
    side = st_min_cut(g, s, t).side_s
    if u not in side or v not in side:
        raise PreconditionViolatedError("u and v must lie on the source side of the st cut")
    best, sets = enumerate_st_mincuts(g, u, v)
    cw, _ = subset_cut_data(g)
    full = (1 << g.n) - 1
    side_mask = sum(1 << x for x in side)
    for attaining in sets:
        a_mask = sum(1 << x for x in attaining)
        inter = side_mask & a_mask            # contains u, not v
        if 0 < inter < full and cw[inter] <= best + _TOL:
            return True
        other = side_mask & (full ^ a_mask)   # contains v, not u
        if 0 < other < full and cw[other] <= best + _TOL:
            return True
    return False


def random_connected_graph(rng: random.Random, n: int, p: float = 0.5,
                           w_lo: float = 0.5, w_hi: float = 1.5) -> WeightedGraph:
    """G(n, p) with i.i.d. uniform(w_lo, w_hi) weights, resampled until connected."""
    while True:
        edges = [(u, v, rng.uniform(w_lo, w_hi))
                 for u in range(n) for v in range(u + 1, n)
                 if rng.random() < p]
        g = build_graph(n, edges)
        if g.is_connected():
            return g


def _distinct_count(values: Sequence[float], tol: float = _TOL) -> int:
    if not values:
        return 0
    ordered = sorted(values)
    count = 1
    for a, b in zip(ordered, ordered[1:]):
        if b - a > tol:
            count += 1
    return count


def _random_sequence(rng: random.Random, n: int, length: int) -> list[int]:
    while True:
        seq = [rng.randrange(n)]
        for _ in range(length - 1):
            nxt = rng.randrange(n)
            while nxt == seq[-1]:
                nxt = rng.randrange(n)
            seq.append(nxt)
        if seq[0] != seq[-1]:
            return seq


def run_property_suite(max_n: int = 14, trials: int = 25,
                       seed: int = 0) -> tuple[list[str], int]:
    """Random-instance sweep over every cross-module relationship.

    Returns (report lines, violation count).  Checks, per random connected
    graph: flow/cut duality against enumeration, the exact <= all-pairs <=
    terminal-sweep chain, sweep coverage of the terminal set, tau-tree
    bottlenecks, the distinct-cut-value bound, and the three structural
    checkers on random vertex tuples.
    """
    if not 4 <= max_n <= ENUM_MAX_N:
        raise ValueError(f"max_n must be in 4..{ENUM_MAX_N}, got {max_n}")
    rng = random.Random(seed)
    names = ("flow_duality", "exact_chain", "terminal_sweep_coverage",
             "tree_bottleneck", "distinct_cut_values", "path_inequality",
             "three_cut_min_nonunique", "noncrossing_cut")
    runs = {name: 0 for name in names}
    bad = {name: 0 for name in names}
    details: list[str] = []

    def record(name: str, ok: bool, context: str) -> None:
        runs[name] += 1
        if not ok:
            bad[name] += 1
            details.append(f"  violation in {name}: {context}")

    for trial in range(trials):
        n = rng.randint(4, max_n)
        # Sparser graphs have larger terminal sets, so vary the density to
        # keep the sweep checks from starving.
        g = random_connected_graph(rng, n, p=rng.uniform(0.2, 0.6))
        ctx = f"trial {trial} (n={n})"

        s, t = rng.sample(range(n), 2)
        cut = st_min_cut(g, s, t)
        flow = max_flow_value(g, s, t)
        enum_min, _ = enumerate_st_mincuts(g, s, t)
        record("flow_duality",
               abs(cut.value - flow) <= _TOL and abs(cut.value - enum_min) <= _TOL
               and s in cut.side_s and t not in cut.side_s, ctx)

        vloc = g.local_maxima()
        for kind in CutKind:
            exact = exact_xcut(g, kind).value
            basic, _ = xvst_basic(g, kind)
            ok = exact <= basic.value + _TOL
            if len(vloc) >= 2:
                swept, _ = xist(g, kind)
                ok = ok and basic.value <= swept.value + _TOL
                covered, _ = xvst_basic(g, kind, subset=vloc)
                record("terminal_sweep_coverage",
                       abs(swept.value - covered.value) <= _TOL,
                       f"{ctx} kind={kind.value}")
            record("exact_chain", ok, f"{ctx} kind={kind.value}")

        if len(vloc) >= 2:
            _, sweep_trace = xist(g, CutKind.NCUT)
            pair_values = []
            tree_ok = True
            for i in range(len(vloc)):
                for j in range(i + 1, len(vloc)):
                    value = st_min_cut(g, vloc[i], vloc[j]).value
                    pair_values.append(value)
                    if abs(value - tree_bottleneck(sweep_trace, vloc[i], vloc[j])) > _TOL:
                        tree_ok = False
            record("tree_bottleneck", tree_ok, ctx)
            record("distinct_cut_values",
                   _distinct_count(pair_values) <= len(vloc) - 1
                   and sweep_trace.flow_calls == len(vloc) - 1, ctx)

        seq = _random_sequence(rng, n, rng.randint(2, min(5, n)))
        record("path_inequality", check_path_inequality(g, seq), f"{ctx} seq={seq}")

        record("three_cut_min_nonunique",
               check_three_cut_nonuniqueness(g, *rng.sample(range(n), 3)), ctx)

        for _ in range(5):
            s2, t2 = rng.sample(range(n), 2)
            pool = sorted(st_min_cut(g, s2, t2).side_s - {s2})
            if len(pool) >= 2:
                u2, v2 = rng.sample(pool, 2)
                record("noncrossing_cut", check_noncrossing(g, s2, t2, u2, v2),
                       f"{ctx} stuv=({s2},{t2},{u2},{v2})")
                break

    lines = [f"{name}: {runs[name]} checks, {bad[name]} violations" for name in names]
    lines.extend(details)
    return lines, sum(bad.values())
