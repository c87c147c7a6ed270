"""Exact enumeration of minimum and minmax k-cut-sets in hypergraphs."""

from ._backend import BACKEND
from .errors import *  # noqa: F401,F403
from .hgr import format_hgr, parse_hgr, read_hgr
from .hypergraph import (
    CutSet,
    Edge,
    Hypergraph,
    KPartition,
    components_after_removal,
    cut_value,
    delta,
    delta_partition,
    induced_subhypergraph,
    validate,
)
from .kcut import CandidateFamily, EnumResult, enum_dc, enum_flat, prune
from .minmax import (
    MinmaxResult,
    RepresentativeTuple,
    enum_minmax_reps,
    minmax_cut_sets_from_reps,
    recover_partition,
)
from .terminal import TerminalCut, source_minimal_min_st_cut

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CandidateFamily",
    "CutSet",
    "Edge",
    "EnumResult",
    "Hypergraph",
    "KPartition",
    "MinmaxResult",
    "RepresentativeTuple",
    "TerminalCut",
    "components_after_removal",
    "cut_value",
    "delta",
    "delta_partition",
    "enum_dc",
    "enum_flat",
    "enum_minmax_reps",
    "format_hgr",
    "induced_subhypergraph",
    "minmax_cut_sets_from_reps",
    "parse_hgr",
    "prune",
    "read_hgr",
    "recover_partition",
    "source_minimal_min_st_cut",
    "validate",
]
