"""Balanced graph cuts via st-min-cut sweeps over locally degree-maximal
vertices, plus exact small-instance search tools.

The ingest and report modules are intentionally not re-exported here: ingest
pulls in numpy parsing helpers most library users never touch, and report
selects a matplotlib backend on import.
"""

from . import errors
from .cuts import (
    CutKind,
    CutResult,
    balance,
    balance_total,
    cut_weight,
    evaluate_cut,
    multiway_xcut_value,
    normalize_value,
    normalized_xcut_value,
    xcut_value,
)
from .flow import StMinCut, max_flow_value, st_min_cut
from .graph import WeightedGraph, build_graph
from .multixist import MultiTrace, SplitStep, cluster_labels, multi_xist
from .xist import (
    SweepStep,
    SweepTrace,
    tree_bottleneck,
    xist,
    xist_on_subset,
    xvst_basic,
)

__version__ = "0.1.0"

__all__ = [
    "CutKind",
    "CutResult",
    "MultiTrace",
    "SplitStep",
    "StMinCut",
    "SweepStep",
    "SweepTrace",
    "WeightedGraph",
    "balance",
    "balance_total",
    "build_graph",
    "cluster_labels",
    "cut_weight",
    "errors",
    "evaluate_cut",
    "max_flow_value",
    "multi_xist",
    "multiway_xcut_value",
    "normalize_value",
    "normalized_xcut_value",
    "st_min_cut",
    "tree_bottleneck",
    "xcut_value",
    "xist",
    "xist_on_subset",
    "xvst_basic",
    "__version__",
]
