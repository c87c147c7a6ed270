"""Immutable weighted hypergraph and the cut-function primitives.

Vertices are ``0..n-1``. Hyperedge ids are dense ``0..m-1`` in construction
order; parallel hyperedges keep distinct ids. Vertex sets are accepted as any
iterable of ints and returned as ``frozenset``. Internally most work is done on
integer bitmasks (bit ``v`` set iff vertex ``v`` is in the set).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    EmptyEdge,
    EmptyOrFullSet,
    EmptySet,
    InvalidPartition,
    NonPositiveWeight,
    UnknownEdgeId,
    ValidationError,
    VertexOutOfRange,
)


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def from_mask(mask: int) -> frozenset[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


def mask_bits(mask: int) -> list[int]:
    """Set bit positions of ``mask`` in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class Edge:
    id: int
    vertices: tuple[int, ...]
    weight: int = 1


@dataclass(frozen=True, order=True)
class CutSet:
    """Canonical set of hyperedge ids; equality is by id list only."""

    edge_ids: tuple[int, ...]
    weight: int = field(compare=False)

    def __len__(self):
        return len(self.edge_ids)

    def __iter__(self):
        return iter(self.edge_ids)

    def __contains__(self, eid):
        return eid in self.edge_ids

    def __hash__(self):
        return hash(self.edge_ids)

    def __eq__(self, other):
        if not isinstance(other, CutSet):
            return NotImplemented
        return self.edge_ids == other.edge_ids

    def union(self, other: "CutSet", graph: "Hypergraph") -> "CutSet":
        return graph.cutset(set(self.edge_ids) | set(other.edge_ids))


@dataclass(frozen=True)
class KPartition:
    """Ordered tuple of disjoint nonempty vertex sets covering ``0..n-1``."""

    parts: tuple[frozenset[int], ...]

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    @classmethod
    def of(cls, n: int, parts: Iterable[Iterable[int]]) -> "KPartition":
        frozen = tuple(frozenset(p) for p in parts)
        seen: set[int] = set()
        for part in frozen:
            if not part:
                raise InvalidPartition("empty part")
            if seen & part:
                raise InvalidPartition("parts overlap")
            seen |= part
        if seen != set(range(n)):
            raise InvalidPartition("parts do not cover the vertex set")
        return cls(frozen)


class Hypergraph:
    """Validated, immutable hypergraph. Build it with :func:`validate`."""

    __slots__ = ("n", "edges", "p", "total_weight", "edge_masks", "weights", "_incident")

    def __init__(self, n: int, edges: Sequence[Edge]):
        self.n = n
        self.edges = tuple(edges)
        self.p = sum(len(e.vertices) for e in self.edges)
        self.total_weight = sum(e.weight for e in self.edges)
        self.edge_masks = tuple(to_mask(e.vertices) for e in self.edges)
        self.weights = tuple(e.weight for e in self.edges)
        incident: list[list[int]] = [[] for _ in range(n)]
        for e in self.edges:
            for v in e.vertices:
                incident[v].append(e.id)
        self._incident = tuple(tuple(x) for x in incident)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def incident(self, v: int) -> tuple[int, ...]:
        return self._incident[v]

    def __repr__(self):
        return f"Hypergraph(n={self.n}, m={self.m}, p={self.p})"

    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def cutset(self, edge_ids: Iterable[int]) -> CutSet:
        ids = tuple(sorted(set(edge_ids)))
        for eid in ids:
            if not 0 <= eid < self.m:
                raise UnknownEdgeId(eid)
        return CutSet(ids, sum(self.weights[i] for i in ids))

    def cutset_from_edge_mask(self, emask: int) -> CutSet:
        ids = tuple(mask_bits(emask))
        return CutSet(ids, sum(self.weights[i] for i in ids))

    def edge_mask_weight(self, emask: int) -> int:
        return sum(self.weights[i] for i in mask_bits(emask))

    # Mask-level primitives; callers guarantee 0 < mask < full_mask.
    def delta_ids_mask(self, mask: int) -> tuple[int, ...]:
        inv = self.full_mask ^ mask
        return tuple(
            i for i, em in enumerate(self.edge_masks) if em & mask and em & inv
        )

    def cut_weight_mask(self, mask: int) -> int:
        inv = self.full_mask ^ mask
        w = 0
        for em, wt in zip(self.edge_masks, self.weights):
            if em & mask and em & inv:
                w += wt
        return w

    def delta_mask(self, mask: int) -> CutSet:
        ids = self.delta_ids_mask(mask)
        return CutSet(ids, sum(self.weights[i] for i in ids))

    def delta_edge_mask(self, mask: int) -> int:
        """Crossing edges of the vertex mask, as a bitmask over edge ids."""
        inv = self.full_mask ^ mask
        out = 0
        for i, em in enumerate(self.edge_masks):
            if em & mask and em & inv:
                out |= 1 << i
        return out

    def component_masks(self, removed: Iterable[int] = (), removed_mask: int = 0) -> list[int]:
        """Connected components of ``(V, E - removed)`` as masks, by min vertex.

        ``removed`` lists edge ids; ``removed_mask`` is the same as a bitmask
        and the two are combined.
        """
        for eid in removed:
            removed_mask |= 1 << eid
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in self.edges:
            if removed_mask >> e.id & 1 or len(e.vertices) < 2:
                continue
            r0 = find(e.vertices[0])
            for v in e.vertices[1:]:
                r = find(v)
                if r != r0:
                    if r < r0:
                        r, r0 = r0, r
                    parent[r] = r0
        comps: dict[int, int] = {}
        for v in range(self.n):
            r = find(v)
            comps[r] = comps.get(r, 0) | (1 << v)
        return sorted(comps.values(), key=lambda m: (m & -m))

    def num_components(self, removed: Iterable[int] = (), removed_mask: int = 0) -> int:
        return len(self.component_masks(removed, removed_mask))


def validate(n: int, edges: Iterable, weights: Iterable[int] | None = None) -> Hypergraph:
    """Build a :class:`Hypergraph` from raw vertex lists.

    ``edges`` holds vertex iterables; weights default to 1. Vertex lists are
    sorted and deduplicated.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValidationError(f"vertex count must be a positive integer, got {n!r}")
    raw = [list(e) for e in edges]
    wts = [1] * len(raw) if weights is None else list(weights)
    if len(wts) != len(raw):
        raise ValidationError("weights and edges differ in length")
    built = []
    for i, (verts, w) in enumerate(zip(raw, wts)):
        if not verts:
            raise EmptyEdge(f"edge {i} has no vertices")
        for v in verts:
            if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < n:
                raise VertexOutOfRange(f"edge {i}: vertex {v!r} not in 0..{n - 1}")
        if isinstance(w, bool) or not isinstance(w, int) or w < 1:
            raise NonPositiveWeight(f"edge {i}: weight {w!r} must be a positive integer")
        built.append(Edge(i, tuple(sorted(set(verts))), w))
    return Hypergraph(n, built)


def _proper_mask(G: Hypergraph, U: Iterable[int]) -> int:
    mask = 0
    for v in U:
        if not 0 <= v < G.n:
            raise VertexOutOfRange(f"vertex {v} not in 0..{G.n - 1}")
        mask |= 1 << v
    if mask == 0 or mask == G.full_mask:
        raise EmptyOrFullSet("cut side must be a nonempty proper subset of V")
    return mask


def delta(G: Hypergraph, U: Iterable[int]) -> CutSet:
    """Hyperedges with at least one vertex in ``U`` and one outside."""
    return G.delta_mask(_proper_mask(G, U))


def cut_value(G: Hypergraph, U: Iterable[int]) -> int:
    return G.cut_weight_mask(_proper_mask(G, U))


def delta_partition(G: Hypergraph, P) -> CutSet:
    """Hyperedges meeting at least two parts of the partition ``P``."""
    parts = P.parts if isinstance(P, KPartition) else P
    part = KPartition.of(G.n, parts)
    label = [0] * G.n
    for i, block in enumerate(part.parts):
        for v in block:
            label[v] = i
    ids = [
        e.id
        for e in G.edges
        if any(label[v] != label[e.vertices[0]] for v in e.vertices[1:])
    ]
    return G.cutset(ids)


def components_after_removal(G: Hypergraph, F: Iterable[int]) -> list[frozenset[int]]:
    ids = list(F)
    for eid in ids:
        if not 0 <= eid < G.m:
            raise UnknownEdgeId(eid)
    return [from_mask(c) for c in G.component_masks(ids)]


def induced_subhypergraph(G: Hypergraph, A: Iterable[int]) -> tuple[Hypergraph, tuple[int, ...]]:
    """``G[A]``: only edges contained in ``A``, vertices relabeled in sorted order.

    Returns the subhypergraph and ``id_map`` with ``id_map[local] = original``.
    Local vertex ``i`` is the ``i``-th smallest member of ``A``.
    """
    verts = sorted(set(A))
    if not verts:
        raise EmptySet("induced subhypergraph needs a nonempty vertex set")
    for v in verts:
        if not 0 <= v < G.n:
            raise VertexOutOfRange(f"vertex {v} not in 0..{G.n - 1}")
    return _induced(G, verts)


def _induced(G: Hypergraph, verts: list[int]):
    local = {v: i for i, v in enumerate(verts)}
    amask = to_mask(verts)
    edges, id_map = [], []
    for e, em in zip(G.edges, G.edge_masks):
        if em & ~amask == 0:
            edges.append(Edge(len(edges), tuple(local[v] for v in e.vertices), e.weight))
            id_map.append(e.id)
    return Hypergraph(len(verts), edges), tuple(id_map)
