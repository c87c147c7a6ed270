"""Source-minimal minimum (S, T)-terminal cuts.

The hypergraph is turned into a flow network with one node per vertex and a
pair ``e_in -> e_out`` per hyperedge carrying its weight; every other arc is
effectively infinite. Vertices reachable from the source in the final residual
network form the smallest minimum source side.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import _backend
from .errors import BadTerminals
from .flow import FlowNetwork
from .hypergraph import CutSet, Hypergraph, from_mask, to_mask


@dataclass(frozen=True)
class TerminalCut:
    source_side: frozenset[int]
    value: int
    cut_set: CutSet


def cap_inf(G: Hypergraph) -> int:
    """Capacity larger than any finite cut of ``G``."""
    return 1 + G.total_weight


def build_network(G: Hypergraph, S: Iterable[int], T: Iterable[int]):
    """Flow network for ``(S, T)``; returns ``(net, source, sink)``.

    Node ``v < n`` is vertex ``v``; hyperedge ``j`` owns nodes ``n + 2j``
    (in) and ``n + 2j + 1`` (out); the super source and sink come last.
    """
    inf = cap_inf(G)
    n, m = G.n, G.m
    net = FlowNetwork(n + 2 * m + 2)
    for e in G.edges:
        e_in, e_out = n + 2 * e.id, n + 2 * e.id + 1
        net.add_arc(e_in, e_out, e.weight)
        for v in e.vertices:
            net.add_arc(v, e_in, inf)
            net.add_arc(e_out, v, inf)
    src, snk = n + 2 * m, n + 2 * m + 1
    for v in S:
        net.add_arc(src, v, inf)
    for v in T:
        net.add_arc(v, snk, inf)
    return net, src, snk


def _check_terminals(G: Hypergraph, S, T) -> tuple[frozenset, frozenset]:
    S, T = frozenset(S), frozenset(T)
    if not S or not T:
        raise BadTerminals("source and sink sets must be nonempty")
    if S & T:
        raise BadTerminals(f"source and sink sets overlap on {sorted(S & T)}")
    for v in S | T:
        if not (isinstance(v, int) and 0 <= v < G.n):
            raise BadTerminals(f"terminal {v!r} is not a vertex of G")
    return S, T


def source_minimal_min_st_cut(G: Hypergraph, S: Iterable[int], T: Iterable[int]) -> TerminalCut:
    """Smallest source side among all minimum ``(S, T)``-terminal cuts."""
    S, T = _check_terminals(G, S, T)
    net, src, snk = build_network(G, S, T)
    value, reach = net.max_flow(src, snk)
    side = frozenset(v for v in reach if v < G.n)
    return TerminalCut(side, value, G.delta_mask(to_mask(side)))


def sweep_source_sides(G: Hypergraph, max_s: int, max_t: int, backend=None):
    """Distinct source-minimal cut sides over every ordered disjoint nonempty
    pair with ``|S| <= max_s`` and ``|T| <= max_t``.

    Returns ``(masks, stats)``; masks ascend. ``stats`` holds ``pairs`` (the
    number of terminal pairs covered) and ``flow_calls`` (max-flow runs the
    kernel actually needed).
    """
    if G.n < 2:
        return [], {"pairs": 0, "flow_calls": 0}
    kernel = _backend.kernel_for(G, backend)
    return kernel.sweep(max_s, max_t)


def source_sides(G: Hypergraph, max_s: int, max_t: int, backend=None) -> list[frozenset[int]]:
    masks, _ = sweep_source_sides(G, max_s, max_t, backend)
    return [from_mask(u) for u in masks]
