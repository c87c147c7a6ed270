import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypercut import errors
from hypercut.hypergraph import (
    CutSet,
    KPartition,
    components_after_removal,
    cut_value,
    delta,
    delta_partition,
    from_mask,
    induced_subhypergraph,
    to_mask,
    validate,
)
from helpers import hypergraphs, path, spanning, triangle


def test_validate_counts():
    G = validate(3, [[0, 1], [1, 2]])
    assert (G.n, G.m, G.p) == (3, 2, 4)


def test_validate_weighted_spanning():
    G = validate(4, [[0, 1, 2, 3]], [2])
    assert G.p == 4 and G.total_weight == 2


def test_validate_sorts_and_dedupes():
    G = validate(4, [[3, 1, 3, 0]])
    assert G.edges[0].vertices == (0, 1, 3)


@pytest.mark.parametrize("n, edges, weights, exc", [
    (2, [[0, 5]], None, errors.VertexOutOfRange),
    (2, [[0, -1]], None, errors.VertexOutOfRange),
    (2, [[]], None, errors.EmptyEdge),
    (2, [[0, 1]], [0], errors.NonPositiveWeight),
    (2, [[0, 1]], [1.5], errors.NonPositiveWeight),
    (0, [], None, errors.ValidationError),
])
def test_validate_rejects(n, edges, weights, exc):
    with pytest.raises(exc):
        validate(n, edges, weights)


def test_singleton_edge_is_inert():
    G = validate(3, [[1], [0, 2]])
    assert delta(G, {1}).edge_ids == ()


def test_delta_triangle():
    cs = delta(triangle(), {0})
    assert cs.edge_ids == (0, 1) and cs.weight == 2


def test_delta_spanning():
    assert delta(spanning(4), {0, 1}) == CutSet((0,), 1)


@pytest.mark.parametrize("U", [set(), {0, 1, 2}])
def test_delta_rejects_trivial_sides(U):
    with pytest.raises(errors.EmptyOrFullSet):
        delta(triangle(), U)


def test_delta_partition_examples():
    assert delta_partition(triangle(), ({0}, {1}, {2})).edge_ids == (0, 1, 2)
    assert delta_partition(spanning(4), ({0, 1}, {2, 3})).edge_ids == (0,)
    G = validate(4, [[0, 1], [2, 3]])
    assert delta_partition(G, KPartition.of(4, [{0, 1}, {2, 3}])).edge_ids == ()


def test_delta_partition_rejects_bad_partition():
    with pytest.raises(errors.InvalidPartition):
        delta_partition(triangle(), ({0}, {0, 1, 2}))
    with pytest.raises(errors.InvalidPartition):
        delta_partition(triangle(), ({0}, {1}))


def test_components_examples():
    G = triangle()
    assert components_after_removal(G, [0, 1]) == [frozenset({0}), frozenset({1, 2})]
    assert components_after_removal(G, []) == [frozenset({0, 1, 2})]
    assert components_after_removal(spanning(4), [0]) == [frozenset({v}) for v in range(4)]
    with pytest.raises(errors.UnknownEdgeId):
        components_after_removal(G, [7])


def test_induced_examples():
    H, ids = induced_subhypergraph(triangle(), {0, 1})
    assert (H.n, H.m, ids) == (2, 1, (0,))
    H, ids = induced_subhypergraph(spanning(4), {0, 1})
    assert (H.n, H.m) == (2, 0)
    H, ids = induced_subhypergraph(path(3), {0, 2})
    assert (H.n, H.m) == (2, 0)
    with pytest.raises(errors.EmptySet):
        induced_subhypergraph(triangle(), set())


def test_induced_relabels_in_sorted_order():
    G = validate(5, [[1, 3], [3, 4], [0, 1]], [1, 2, 3])
    H, ids = induced_subhypergraph(G, {4, 3, 1})
    assert [e.vertices for e in H.edges] == [(0, 1), (1, 2)]
    assert ids == (0, 1) and H.weights == (1, 2)


def test_cutset_canonical_equality():
    a = CutSet((1, 2), 3)
    assert a == CutSet((1, 2), 99) and hash(a) == hash(CutSet((1, 2), 0))
    G = triangle()
    assert G.cutset([2, 0, 2]).edge_ids == (0, 2)


@st.composite
def graph_and_side(draw):
    G = draw(hypergraphs(n_lo=2))
    u = draw(st.integers(1, (1 << G.n) - 2))
    return G, u


@given(graph_and_side())
def test_symmetry(gu):
    G, u = gu
    assert delta(G, from_mask(u)) == delta(G, from_mask(G.full_mask ^ u))


@given(hypergraphs(n_lo=3), st.data())
def test_submodularity(G, data):
    full = G.full_mask
    a = data.draw(st.integers(1, full - 1))
    b = data.draw(st.integers(1, full - 1))
    lhs = G.cut_weight_mask(a) + G.cut_weight_mask(b)
    rhs = sum(G.cut_weight_mask(x) for x in (a & b, a | b) if 0 < x < full)
    assert lhs >= rhs


@given(hypergraphs(n_lo=2), st.data())
@settings(max_examples=60)
def test_delta_partition_is_union_and_order_free(G, data):
    labels = data.draw(st.lists(st.integers(0, 2), min_size=G.n, max_size=G.n))
    parts = [p for p in ({v for v in range(G.n) if labels[v] == c} for c in range(3)) if p]
    if len(parts) < 2:
        return
    cs = delta_partition(G, parts)
    union = set()
    for p in parts:
        union |= set(delta(G, p).edge_ids)
    assert set(cs.edge_ids) == union
    assert delta_partition(G, parts[::-1]) == cs


@given(hypergraphs(), st.data())
def test_components_partition_vertices(G, data):
    F = data.draw(st.sets(st.integers(0, max(G.m - 1, 0)))) if G.m else set()
    comps = components_after_removal(G, F)
    assert sorted(v for c in comps for v in c) == list(range(G.n))
    assert [min(c) for c in comps] == sorted(min(c) for c in comps)
    where = {v: i for i, c in enumerate(comps) for v in c}
    for e in G.edges:
        if e.id not in F:
            assert len({where[v] for v in e.vertices}) == 1


def test_mask_roundtrip():
    assert from_mask(to_mask([0, 3, 5])) == frozenset({0, 3, 5})
    assert cut_value(triangle(), {0}) == 2
