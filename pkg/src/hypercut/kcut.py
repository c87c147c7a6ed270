"""Enumeration of all minimum k-cut-sets.

Both enumerators start from the same sweep: every ordered pair of disjoint
terminal sets with at most ``2k - 1`` vertices each yields a source-minimal
minimum cut ``U``. If removing ``delta(U)`` already leaves ``k`` components,
``delta(U)`` is a candidate; otherwise ``U`` is kept as a building block.
:func:`enum_flat` assembles k-partitions out of the blocks, while
:func:`enum_dc` splits along each block and recurses on both sides.

Internally cut-sets are integer bitmasks over edge ids.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from .errors import EmptyFamily, KOutOfRange
from .hypergraph import CutSet, Hypergraph, _induced, mask_bits
from .terminal import sweep_source_sides


@dataclass
class CandidateFamily:
    cut_sets: set = field(default_factory=set)  # edge bitmasks
    sources: set = field(default_factory=set)  # vertex bitmasks


@dataclass
class EnumResult:
    opt_value: int
    min_k_cut_sets: set
    stats: dict = field(default_factory=dict)

    def sorted_cut_sets(self) -> list[CutSet]:
        return sorted(self.min_k_cut_sets, key=lambda c: c.edge_ids)


def _check_k(G: Hypergraph, k: int, lo: int):
    if isinstance(k, bool) or not isinstance(k, int) or not lo <= k <= G.n:
        raise KOutOfRange(f"k must lie in {lo}..{G.n}, got {k!r}")


def _collect(G: Hypergraph, k: int, backend, stats: dict) -> CandidateFamily:
    r = 2 * k - 1
    masks, sweep = sweep_source_sides(G, r, r, backend)
    for key, val in sweep.items():
        stats[key] = stats.get(key, 0) + val
    fam = CandidateFamily()
    for u in masks:
        f = G.delta_edge_mask(u)
        if G.num_components(removed_mask=f) >= k:
            fam.cut_sets.add(f)
        else:
            fam.sources.add(u)
    return fam


def _prune_masks(G: Hypergraph, k: int, family: Iterable[int]) -> tuple[int, set[int]]:
    best, keep = None, set()
    comps: dict[int, bool] = {}
    for f in family:
        if f not in comps:
            comps[f] = G.num_components(removed_mask=f) >= k
        if not comps[f]:
            continue
        w = G.edge_mask_weight(f)
        if best is None or w < best:
            best, keep = w, {f}
        elif w == best:
            keep.add(f)
    if best is None:
        raise EmptyFamily(f"no candidate leaves {k} components")
    return best, keep


def prune(G: Hypergraph, k: int, family) -> EnumResult:
    """Keep the cheapest candidates whose removal leaves at least ``k`` components.

    ``family`` may be a :class:`CandidateFamily` (its cut-sets are used) or
    any iterable of :class:`CutSet` / edge-id collections.
    """
    if isinstance(family, CandidateFamily):
        masks = list(family.cut_sets)
    else:
        masks = []
        for f in family:
            ids = f.edge_ids if isinstance(f, CutSet) else G.cutset(f).edge_ids
            m = 0
            for i in ids:
                m |= 1 << i
            masks.append(m)
    if not masks:
        raise EmptyFamily("empty candidate family")
    best, keep = _prune_masks(G, k, masks)
    return EnumResult(best, {G.cutset_from_edge_mask(f) for f in keep}, {"candidates": len(masks)})


def _exact_covers(n: int, k: int, sources: Iterable[int]):
    """Sets of ``k`` pairwise-disjoint members of ``sources`` covering ``range(n)``."""
    full = (1 << n) - 1
    by_low: dict[int, list[int]] = {}
    for s in sorted(sources):
        by_low.setdefault(s & -s, []).append(s)
    chosen: list[int] = []

    def rec(covered):
        if len(chosen) == k:
            if covered == full:
                yield tuple(chosen)
            return
        rest = full ^ covered
        if not rest:
            return
        for s in by_low.get(rest & -rest, ()):
            if s & covered == 0:
                chosen.append(s)
                yield from rec(covered | s)
                chosen.pop()

    yield from rec(0)


def _flat_masks(G: Hypergraph, k: int, backend, stats) -> tuple[int, set[int]]:
    fam = _collect(G, k, backend, stats)
    cands = set(fam.cut_sets)
    cross = {}
    for parts in _exact_covers(G.n, k, fam.sources):
        f = 0
        for u in parts:
            if u not in cross:
                cross[u] = G.delta_edge_mask(u)
            f |= cross[u]
        cands.add(f)
    stats["candidates"] = stats.get("candidates", 0) + len(cands)
    return _prune_masks(G, k, cands)


def enum_flat(G: Hypergraph, k: int, backend=None) -> EnumResult:
    """All minimum k-cut-sets of ``G`` (``2 <= k <= n``)."""
    _check_k(G, k, 2)
    stats = {"pairs": 0, "flow_calls": 0}
    opt, masks = _flat_masks(G, k, backend, stats)
    return EnumResult(opt, {G.cutset_from_edge_mask(f) for f in masks}, stats)


def _lift(f: int, id_map) -> int:
    out = 0
    for i in mask_bits(f):
        out |= 1 << id_map[i]
    return out


def _dc_masks(G: Hypergraph, k: int, backend, stats, memo) -> tuple[int, set[int]]:
    if k == 1:
        return 0, {0}
    key = (G, k)
    if key in memo:
        return memo[key]
    fam = _collect(G, k, backend, stats)
    cands = set(fam.cut_sets)
    for a in sorted(fam.sources):
        for f in _split(G, a, k, backend, stats, memo):
            cands.add(f)
    stats["candidates"] = stats.get("candidates", 0) + len(cands)
    memo[key] = out = _prune_masks(G, k, cands)
    return out


def _halves(G: Hypergraph, a: int, k: int):
    """The two recursive subproblems for source side ``a``, or None if the
    size guard rules the split out."""
    half = k // 2
    b = G.full_mask ^ a
    if a.bit_count() < half or b.bit_count() < k - half:
        return None
    return (a, half), (b, k - half)


def _sub(G: Hypergraph, side: int):
    return _induced(G, mask_bits(side))


def _combine(G: Hypergraph, a: int, left, right) -> set[int]:
    (_, fl, map_l), (_, fr, map_r) = left, right
    base = G.delta_edge_mask(a)
    return {base | _lift(x, map_l) | _lift(y, map_r) for x in fl for y in fr}


def _split(G, a, k, backend, stats, memo) -> set[int]:
    job = _halves(G, a, k)
    if job is None:
        return set()
    res = []
    for side, kk in job:
        H, id_map = _sub(G, side)
        opt, fs = _dc_masks(H, kk, backend, stats, memo)
        res.append((opt, fs, id_map))
    return _combine(G, a, res[0], res[1])


def enum_dc(G: Hypergraph, k: int, backend=None, threads: int = 1) -> EnumResult:
    """All minimum k-cut-sets via the divide-and-conquer recursion (``1 <= k <= n``).

    With ``threads > 1`` the subproblems of the top level run on a thread
    pool; each worker keeps its own memo so counters do not depend on the
    schedule.
    """
    _check_k(G, k, 1)
    stats = {"pairs": 0, "flow_calls": 0}
    if k == 1:
        return EnumResult(0, {CutSet((), 0)}, stats)
    fam = _collect(G, k, backend, stats)
    jobs = {}
    plan = []
    for a in sorted(fam.sources):
        halves = _halves(G, a, k)
        if halves is None:
            continue
        keys = []
        for side, kk in halves:
            H, id_map = _sub(G, side)
            jobs.setdefault((H, kk), None)
            keys.append((H, kk, id_map))
        plan.append((a, keys))

    def run(job):
        H, kk = job
        local = {"pairs": 0, "flow_calls": 0}
        opt, fs = _dc_masks(H, kk, backend, local, {})
        return opt, fs, local

    order = list(jobs)
    if threads and threads > 1 and len(order) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run, order))
    else:
        results = [run(job) for job in order]
    for job, (opt, fs, local) in zip(order, results):
        jobs[job] = fs
        for key, val in local.items():
            stats[key] = stats.get(key, 0) + val
    cands = set(fam.cut_sets)
    for a, keys in plan:
        (h1, k1, m1), (h2, k2, m2) = keys
        cands |= _combine(G, a, (None, jobs[(h1, k1)], m1), (None, jobs[(h2, k2)], m2))
    stats["candidates"] = stats.get("candidates", 0) + len(cands)
    opt, masks = _prune_masks(G, k, cands)
    return EnumResult(opt, {G.cutset_from_edge_mask(f) for f in masks}, stats)
