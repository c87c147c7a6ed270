"""Representatives of optimum minmax k-partitions.

A tuple ``(U_1, ..., U_k)`` of disjoint vertex sets represents a k-partition
``(V_1, ..., V_k)`` when ``U_i`` lies inside ``V_i`` and both cross the same
hyperedges. :func:`recover_partition` decides whether some partition is
represented, and :func:`enum_minmax_reps` finds representatives of every
partition minimizing ``max_i d(V_i)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import EmptySubset, KOutOfRange, OverlappingSubsets, VertexOutOfRange
from .hypergraph import CutSet, Hypergraph, KPartition, from_mask, to_mask
from .terminal import sweep_source_sides


@dataclass(frozen=True)
class RepresentativeTuple:
    subsets: tuple[frozenset[int], ...]
    values: tuple[int, ...]

    @property
    def score(self) -> int:
        return max(self.values)

    @classmethod
    def of(cls, G: Hypergraph, subsets: Iterable[Iterable[int]]) -> "RepresentativeTuple":
        parts = tuple(frozenset(s) for s in subsets)
        return cls(parts, tuple(G.cut_weight_mask(to_mask(p)) for p in parts))


@dataclass
class MinmaxResult:
    lambda_: int
    representatives: set
    minmax_cut_sets: set
    stats: dict


def _check_masks(G: Hypergraph, subsets) -> list[int]:
    masks, seen = [], 0
    for s in subsets:
        m = 0
        for v in s:
            if not 0 <= v < G.n:
                raise VertexOutOfRange(f"vertex {v} not in 0..{G.n - 1}")
            m |= 1 << v
        if not m:
            raise EmptySubset("representative parts must be nonempty")
        if m & seen:
            raise OverlappingSubsets(f"vertices {sorted(from_mask(m & seen))} appear twice")
        seen |= m
        masks.append(m)
    return masks


def _recover(G: Hypergraph, masks: Sequence[int], deltas: Sequence[int]) -> list[int] | None:
    removed = 0
    union = 0
    for m, f in zip(masks, deltas):
        removed |= f
        union |= m
    parts = list(masks)
    if union != G.full_mask:
        for comp in G.component_masks(removed_mask=removed):
            if comp & union:
                continue
            for i, p in enumerate(parts):
                if G.delta_edge_mask(p | comp) == deltas[i]:
                    parts[i] = p | comp
                    break
            else:
                return None
    covered = 0
    for p in parts:
        covered |= p
    return parts if covered == G.full_mask else None


def recover_partition(G: Hypergraph, subsets: Sequence[Iterable[int]]) -> KPartition | None:
    """A k-partition represented by ``subsets``, or None if there is none.

    Components of ``G`` minus all crossing edges that avoid every subset are
    merged first-fit, in order of their smallest vertex, into the first part
    whose crossing edges they leave unchanged.
    """
    masks = _check_masks(G, subsets)
    deltas = [G.delta_edge_mask(m) if m != G.full_mask else 0 for m in masks]
    parts = _recover(G, masks, deltas)
    if parts is None:
        return None
    return KPartition(tuple(from_mask(p) for p in parts))


def minmax_cut_sets_from_reps(G: Hypergraph, reps: Iterable[RepresentativeTuple]) -> set[CutSet]:
    out = set()
    for rep in reps:
        f = 0
        for part in rep.subsets:
            f |= G.delta_edge_mask(to_mask(part))
        out.add(f)
    return {G.cutset_from_edge_mask(f) for f in out}


def enum_minmax_reps(G: Hypergraph, k: int, backend=None) -> MinmaxResult:
    """Representatives of all optimum minmax k-partitions (``2 <= k <= n``).

    Tuples are taken as unordered k-subsets of the collected source sides,
    visited cheapest-first so that any tuple scoring above the best value seen
    so far is skipped.
    """
    if isinstance(k, bool) or not isinstance(k, int) or not 2 <= k <= G.n:
        raise KOutOfRange(f"k must lie in 2..{G.n}, got {k!r}")
    r = 2 * k - 1
    sides, stats = sweep_source_sides(G, r, r, backend)
    stats = dict(stats)
    info = sorted((G.cut_weight_mask(u), u) for u in sides)
    weight = [w for w, _ in info]
    masks = [u for _, u in info]
    deltas = [G.delta_edge_mask(u) for u in masks]
    best = None
    found: list[tuple[int, ...]] = []
    tried = 0
    chosen: list[int] = []

    def rec(start, used):
        nonlocal best, found, tried
        if len(chosen) == k:
            tried += 1
            idx = chosen
            parts = _recover(G, [masks[i] for i in idx], [deltas[i] for i in idx])
            if parts is None:
                return
            score = weight[idx[-1]]
            if best is None or score < best:
                best, found = score, [tuple(idx)]
            elif score == best:
                found.append(tuple(idx))
            return
        for i in range(start, len(masks)):
            if best is not None and weight[i] > best:
                break
            if masks[i] & used:
                continue
            chosen.append(i)
            rec(i + 1, used | masks[i])
            chosen.pop()

    rec(0, 0)
    stats["tuples"] = tried
    reps = set()
    for idx in found:
        parts = sorted((masks[i] for i in idx), key=lambda m: m & -m)
        reps.add(RepresentativeTuple(
            tuple(from_mask(m) for m in parts),
            tuple(G.cut_weight_mask(m) for m in parts),
        ))
    cut_sets = set()
    for idx in found:
        f = 0
        for i in idx:
            f |= deltas[i]
        cut_sets.add(f)
    return MinmaxResult(best, reps, {G.cutset_from_edge_mask(f) for f in cut_sets}, stats)


def sorted_reps(reps: Iterable[RepresentativeTuple]) -> list[RepresentativeTuple]:
    return sorted(reps, key=lambda r: [sorted(p) for p in r.subsets])
