import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypercut import errors
from hypercut.hypergraph import CutSet, to_mask
from hypercut.kcut import enum_flat
from hypercut.minmax import (
    RepresentativeTuple,
    enum_minmax_reps,
    minmax_cut_sets_from_reps,
    recover_partition,
)
from hypercut.oracle import all_k_partitions, oracle_minmax, optimum_minmax_partitions
from helpers import complete, hypergraphs, random_instance, represents, spanning, star, triangle


def test_recover_full_partition_unchanged():
    P = recover_partition(triangle(), [{0}, {1, 2}])
    assert P.parts == (frozenset({0}), frozenset({1, 2}))


def test_recover_spanning_first_fit():
    P = recover_partition(spanning(4), [{0}, {1}])
    assert P.parts == (frozenset({0, 2, 3}), frozenset({1}))


def test_recover_triangle_fails():
    assert recover_partition(triangle(), [{0}, {1}]) is None


def test_recover_rejects_bad_input():
    with pytest.raises(errors.OverlappingSubsets):
        recover_partition(triangle(), [{0, 1}, {1}])
    with pytest.raises(errors.EmptySubset):
        recover_partition(triangle(), [{0}, set()])


@st.composite
def graph_and_tuple(draw):
    G = draw(hypergraphs(n_lo=2, n_hi=6))
    k = draw(st.integers(2, G.n))
    labels = draw(st.lists(st.integers(-1, k - 1), min_size=G.n, max_size=G.n))
    parts = [{v for v in range(G.n) if labels[v] == i} for i in range(k)]
    if any(not p for p in parts):
        return G, None
    return G, parts


@given(graph_and_tuple())
@settings(max_examples=150)
def test_recover_agrees_with_exhaustive_search(case):
    G, parts = case
    if parts is None:
        return
    masks = [to_mask(p) for p in parts]
    deltas = [G.delta_edge_mask(m) for m in masks]
    exists = False
    for P in all_k_partitions(G.n, len(parts)):
        blocks = [to_mask(b) for b in P.parts]
        if represents(G, masks, blocks):
            exists = True
            break
    got = recover_partition(G, parts)
    assert (got is not None) == exists
    if got is not None:
        for u, d, b in zip(masks, deltas, got.parts):
            assert u & ~to_mask(b) == 0 and G.delta_edge_mask(to_mask(b)) == d


def test_complete_graph_lambda():
    res = enum_minmax_reps(complete(6), 3)
    assert res.lambda_ == 8
    assert all(rep.score == 8 for rep in res.representatives)


def test_spanning_edge_minmax():
    res = enum_minmax_reps(spanning(5), 2)
    assert res.lambda_ == 1 and res.minmax_cut_sets == {CutSet((0,), 1)}


def test_star_minmax():
    res = enum_minmax_reps(star(3), 2)
    assert res.lambda_ == 1
    assert {c.edge_ids for c in res.minmax_cut_sets} == {(0,), (1,), (2,)}


def test_minmax_k_range():
    with pytest.raises(errors.KOutOfRange):
        enum_minmax_reps(triangle(), 4)
    with pytest.raises(errors.KOutOfRange):
        enum_minmax_reps(triangle(), 1)


def test_cut_sets_from_reps():
    G = spanning(4)
    rep = RepresentativeTuple.of(G, [{0}, {1}])
    assert minmax_cut_sets_from_reps(G, [rep]) == {CutSet((0,), 1)}
    assert minmax_cut_sets_from_reps(G, []) == set()
    other = RepresentativeTuple.of(G, [{2}, {3}])
    assert minmax_cut_sets_from_reps(G, [rep, other]) == {CutSet((0,), 1)}


def test_reps_image_matches_cut_sets():
    G = random_instance(random.Random(2))
    res = enum_minmax_reps(G, 3)
    assert minmax_cut_sets_from_reps(G, res.representatives) == res.minmax_cut_sets


@given(hypergraphs(n_lo=2, n_hi=6, m_hi=9), st.integers(2, 4))
@settings(max_examples=60, deadline=None)
def test_matches_oracle_and_covers_optima(G, k):
    if k > G.n:
        return
    lam, sets = oracle_minmax(G, k)
    res = enum_minmax_reps(G, k)
    assert res.lambda_ == lam and res.minmax_cut_sets == sets
    assert res.lambda_ <= enum_flat(G, k).opt_value
    reps = [[to_mask(p) for p in rep.subsets] for rep in res.representatives]
    _, optimum = optimum_minmax_partitions(G, k)
    for blocks in optimum:
        assert any(represents(G, rep, blocks) for rep in reps)
