"""Instance builders shared by the test modules."""

import random
from itertools import combinations

from hypothesis import strategies as st

from hypercut.hypergraph import mask_bits, validate


def cycle(n):
    return validate(n, [[i, (i + 1) % n] for i in range(n)])


def path(n):
    return validate(n, [[i, i + 1] for i in range(n - 1)])


def complete(n):
    return validate(n, [list(c) for c in combinations(range(n), 2)])


def spanning(n, weight=1):
    return validate(n, [list(range(n))], [weight])


def star(leaves):
    return validate(leaves + 1, [[0, i] for i in range(1, leaves + 1)])


def triangle():
    return validate(3, [[0, 1], [0, 2], [1, 2]])


def random_instance(rng: random.Random, n_lo=4, n_hi=8, m_hi=12, weights=(1, 2)):
    """Random hypergraph with n in [n_lo, n_hi] and m in [n, m_hi]."""
    n = rng.randint(n_lo, n_hi)
    m = rng.randint(n, max(n, m_hi))
    edges = [rng.sample(range(n), rng.randint(2, min(4, n))) for _ in range(m)]
    return validate(n, edges, [rng.choice(weights) for _ in range(m)])


@st.composite
def hypergraphs(draw, n_lo=2, n_hi=7, m_hi=10, max_weight=2, min_size=1):
    n = draw(st.integers(n_lo, n_hi))
    m = draw(st.integers(0, m_hi))
    edges = draw(st.lists(
        st.lists(st.integers(0, n - 1), min_size=min_size, max_size=min(4, n), unique=True),
        min_size=m, max_size=m,
    ))
    weights = draw(st.lists(st.integers(1, max_weight), min_size=m, max_size=m))
    return validate(n, edges, weights)


def proper_subsets(n):
    """All nonempty proper vertex subsets as sorted lists."""
    return [mask_bits(u) for u in range(1, (1 << n) - 1)]


def represents(G, rep_masks, partition_masks):
    """True if the tuple matches the partition blocks one-to-one with
    U inside V and equal crossing edges."""
    used = set()
    for u in rep_masks:
        hit = None
        for j, b in enumerate(partition_masks):
            if j not in used and u & ~b == 0:
                hit = j
                break
        if hit is None or G.delta_edge_mask(u) != G.delta_edge_mask(partition_masks[hit]):
            return False
        used.add(hit)
    return len(used) == len(partition_masks)
