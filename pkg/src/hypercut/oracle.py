"""Brute-force ground truth for small hypergraphs.

Everything here enumerates partitions or subsets directly, so it is only meant
for desk-scale instances; a :class:`~hypercut.errors.TooLarge` error is raised
past the configured vertex cap instead of running for hours.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

import numpy as np

from .errors import BadTerminals, KOutOfRange, PreconditionViolated, TooLarge
from .hypergraph import CutSet, Hypergraph, KPartition, from_mask, mask_bits, to_mask

PARTITION_CAP = 10
SUBSET_CAP = 8


@dataclass
class OracleReport:
    opt_k_cut: int
    min_k_cut_sets: set
    opt_minmax: int
    minmax_cut_sets: set
    partition_count: int


def _check_cap(n, cap, what):
    if n > cap:
        raise TooLarge(f"{what} limited to n <= {cap}, got n = {n}")


def _partition_masks(n: int, k: int) -> Iterator[list[int]]:
    """Restricted growth strings; blocks come out ordered by minimum element."""
    blocks = [0] * k

    def rec(v, used):
        if n - v < k - used:
            return
        if v == n:
            yield list(blocks)
            return
        bit = 1 << v
        for b in range(used):
            blocks[b] |= bit
            yield from rec(v + 1, used)
            blocks[b] ^= bit
        if used < k:
            blocks[used] = bit
            yield from rec(v + 1, used + 1)
            blocks[used] = 0

    yield from rec(0, 0)


def all_k_partitions(n: int, k: int, cap: int = PARTITION_CAP) -> Iterator[KPartition]:
    """Every unordered partition of ``range(n)`` into ``k`` nonempty blocks."""
    if not 1 <= k <= n:
        raise KOutOfRange(f"need 1 <= k <= n, got k={k}, n={n}")
    _check_cap(n, cap, "partition enumeration")
    for blocks in _partition_masks(n, k):
        yield KPartition(tuple(from_mask(b) for b in blocks))


def cut_tables(G: Hypergraph):
    """``(weight, edge_mask)`` arrays indexed by every vertex mask of ``G``.

    Masks 0 and full get weight 0 and an empty edge mask.
    """
    masks = np.arange(1 << G.n, dtype=np.int64)
    weight = np.zeros(1 << G.n, dtype=np.int64)
    emask = np.zeros(1 << G.n, dtype=object if G.m > 62 else np.int64)
    for i, (em, w) in enumerate(zip(G.edge_masks, G.weights)):
        inside = masks & em
        crossing = (inside != 0) & (inside != em)
        weight[crossing] += w
        emask[crossing] |= 1 << i
    return weight, emask


def _scan(G: Hypergraph, k: int, cap: int):
    if not 1 <= k <= G.n:
        raise KOutOfRange(f"need 1 <= k <= n, got k={k}, n={G.n}")
    _check_cap(G.n, cap, "partition enumeration")
    weight, emask = cut_tables(G)
    weight, emask = weight.tolist(), emask.tolist()
    for blocks in _partition_masks(G.n, k):
        union = 0
        worst = 0
        for b in blocks:
            union |= emask[b]
            if weight[b] > worst:
                worst = weight[b]
        yield blocks, union, worst


def oracle_min_k_cut_sets(G: Hypergraph, k: int, cap: int = PARTITION_CAP) -> tuple[int, set[CutSet]]:
    best, found = None, set()
    for _, union, _ in _scan(G, k, cap):
        w = G.edge_mask_weight(union)
        if best is None or w < best:
            best, found = w, {union}
        elif w == best:
            found.add(union)
    return best, {G.cutset_from_edge_mask(f) for f in found}


def optimum_minmax_partitions(G: Hypergraph, k: int, cap: int = PARTITION_CAP):
    """``(opt_minmax, list of optimum partitions as block-mask lists)``."""
    best, parts = None, []
    for blocks, _, worst in _scan(G, k, cap):
        if best is None or worst < best:
            best, parts = worst, [blocks]
        elif worst == best:
            parts.append(blocks)
    return best, parts


def oracle_minmax(G: Hypergraph, k: int, cap: int = PARTITION_CAP) -> tuple[int, set[CutSet]]:
    best, found = None, set()
    for _, union, worst in _scan(G, k, cap):
        if best is None or worst < best:
            best, found = worst, {union}
        elif worst == best:
            found.add(union)
    return best, {G.cutset_from_edge_mask(f) for f in found}


def oracle_report(G: Hypergraph, k: int, cap: int = PARTITION_CAP) -> OracleReport:
    best_cut = best_mm = None
    cuts, mms = set(), set()
    count = 0
    for _, union, worst in _scan(G, k, cap):
        count += 1
        w = G.edge_mask_weight(union)
        if best_cut is None or w < best_cut:
            best_cut, cuts = w, {union}
        elif w == best_cut:
            cuts.add(union)
        if best_mm is None or worst < best_mm:
            best_mm, mms = worst, {union}
        elif worst == best_mm:
            mms.add(union)
    return OracleReport(
        best_cut,
        {G.cutset_from_edge_mask(f) for f in cuts},
        best_mm,
        {G.cutset_from_edge_mask(f) for f in mms},
        count,
    )


def _terminal_masks(G, S, T):
    s, t = to_mask(S), to_mask(T)
    if not s or not t or s & t or (s | t) >> G.n:
        raise BadTerminals("terminals must be nonempty, disjoint vertex sets")
    return s, t


def _min_sides(weight: np.ndarray, s: int, t: int):
    """Minimum value and all minimizing masks ``U`` with ``s <= U``, ``U & t == 0``."""
    masks = np.arange(len(weight), dtype=np.int64)
    ok = ((masks & s) == s) & ((masks & t) == 0)
    vals = weight[ok]
    best = vals.min()
    return int(best), masks[ok][vals == best]


def all_min_st_cuts(G: Hypergraph, S: Iterable[int], T: Iterable[int], cap: int = SUBSET_CAP) -> set[frozenset[int]]:
    _check_cap(G.n, cap, "subset enumeration")
    s, t = _terminal_masks(G, S, T)
    weight, _ = cut_tables(G)
    _, sides = _min_sides(weight, s, t)
    return {from_mask(int(u)) for u in sides}


def _subsets_by_size(pool: list[int], lo: int, hi: int):
    for size in range(lo, hi + 1):
        for combo in combinations(pool, size):
            yield size, to_mask(combo)


def _pairs_small_first(u_pool, t_pool, lo, max_s, max_t):
    """Pairs of subsets ordered by total size, then lexicographically."""
    s_list = [(size, m, tuple(mask_bits(m))) for size, m in _subsets_by_size(u_pool, lo, max_s)]
    t_list = [(size, m, tuple(mask_bits(m))) for size, m in _subsets_by_size(t_pool, lo, max_t)]
    pairs = [(a[0] + b[0], a[2], b[2], a[1], b[1]) for a in s_list for b in t_list]
    pairs.sort()
    for _, _, _, sm, tm in pairs:
        yield sm, tm


def _proper(G, U):
    u = to_mask(U)
    if u == 0 or u == G.full_mask or u >> G.n:
        raise PreconditionViolated("U must be a nonempty proper subset of V")
    return u


def verify_structure_thm_1(G: Hypergraph, k: int, U: Iterable[int], cap: int = SUBSET_CAP):
    """Check the small-terminal uniqueness property of a light cut ``U``.

    For every ``s`` in ``U`` and ``t`` outside it, look for ``S`` in ``U - s``
    and ``T`` in ``V - U - t`` of size at most ``2k - 3`` such that ``U`` is the
    only minimum ``(S + s, T + t)`` cut. Returns ``{(s, t): (S, T)}`` or None
    if some pair has no such sets. Requires ``d(U)`` below the optimum k-cut.
    """
    _check_cap(G.n, cap, "subset enumeration")
    u = _proper(G, U)
    opt, _ = oracle_min_k_cut_sets(G, k, cap=max(cap, G.n))
    weight, _ = cut_tables(G)
    if weight[u] >= opt:
        raise PreconditionViolated(f"d(U) = {weight[u]} is not below the optimum {opt}")
    r = max(2 * k - 3, 0)
    inside, outside = mask_bits(u), mask_bits(G.full_mask ^ u)
    witness = {}
    for s in inside:
        for t in outside:
            found = None
            pool_s = [v for v in inside if v != s]
            pool_t = [v for v in outside if v != t]
            for sm, tm in _pairs_small_first(pool_s, pool_t, 0, min(r, len(pool_s)), min(r, len(pool_t))):
                _, sides = _min_sides(weight, sm | 1 << s, tm | 1 << t)
                if len(sides) == 1 and int(sides[0]) == u:
                    found = (from_mask(sm), from_mask(tm))
                    break
            if found is None:
                return None
            witness[(s, t)] = found
    return witness


def verify_recovery_theorem(G: Hypergraph, k: int, U: Iterable[int], cap: int = SUBSET_CAP):
    """Look for ``S`` in ``U``, ``T`` outside, both of size 1..2k-1, such that
    every minimum ``(S, T)`` cut crosses exactly the edges ``U`` crosses.

    Returns ``(S, T)`` or None. Requires ``d(U)`` to equal the optimum k-cut.
    """
    _check_cap(G.n, cap, "subset enumeration")
    u = _proper(G, U)
    opt, _ = oracle_min_k_cut_sets(G, k, cap=max(cap, G.n))
    weight, emask = cut_tables(G)
    if weight[u] != opt:
        raise PreconditionViolated(f"d(U) = {weight[u]} differs from the optimum {opt}")
    r = 2 * k - 1
    inside, outside = mask_bits(u), mask_bits(G.full_mask ^ u)
    target = emask[u]
    for sm, tm in _pairs_small_first(inside, outside, 1, min(r, len(inside)), min(r, len(outside))):
        _, sides = _min_sides(weight, sm, tm)
        if all(emask[int(a)] == target for a in sides):
            return from_mask(sm), from_mask(tm)
    return None
