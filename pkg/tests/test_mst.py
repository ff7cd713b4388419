import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spacegraph import oracles
from spacegraph.graph import from_edges
from spacegraph.mst import CandidatePool, _select_smallest, mst

from conftest import connected_graph, random_graph


@given(st.integers(1, 80), st.integers(0, 200), st.integers(1, 6), st.integers(0, 999))
@settings(max_examples=80, deadline=None)
def test_forest_weight_matches_kruskal(n, m, cap, seed):
    g = random_graph(random.Random(seed), n, m, weighted=True)
    res = mst(g, capacity=cap, check=True)
    assert res.total == oracles.kruskal(g)[0]
    assert oracles.is_spanning_forest(g, res.edges)
    assert res.stats["max_pool"] <= cap
    assert res.ledger.audit() == []


def test_ties_and_zero_weights():
    rng = random.Random(4)
    for _ in range(30):
        g = connected_graph(rng, 50, 80, weighted=True)
        assert mst(g, capacity=2).total == oracles.kruskal(g)[0]


def test_disconnected_gives_forest():
    g = from_edges(5, [(0, 1, 3), (3, 4, 1)])
    res = mst(g)
    assert res.stats["components"] == 3
    assert sorted(res.edges) == [(0, 1, 3), (3, 4, 1)]


def test_preconditions():
    with pytest.raises(ValueError):
        mst(from_edges(2, [(0, 1)]))
    with pytest.raises(ValueError):
        mst(from_edges(2, [(0, 1, 1)], directed=True))


def test_pool_min_max_and_index():
    rng = random.Random(2)
    pool = CandidatePool(16, 1000, 48)
    ref = {}
    for _ in range(2000):
        r = rng.random()
        if r < 0.5 and pool.size < 16:
            v = rng.randrange(1000)
            if v not in ref:
                k = rng.randrange(1 << 40)
                pool.insert(v, k, 0)
                ref[v] = k
        elif r < 0.7 and ref:
            v = rng.choice(sorted(ref))
            s = pool.find(v)
            k = rng.randrange(ref[v] + 1)
            pool.decrease(s, k, 1)
            ref[v] = k
        elif r < 0.85 and ref:
            v, k, _ = pool.pop_min()
            assert k == min(ref.values()) and ref.pop(v) == k
        elif ref:
            v, k, _ = pool.pop_max()
            assert k == max(ref.values()) and ref.pop(v) == k
        for v in list(ref)[:3]:
            assert pool.key[pool.find(v)] == ref[v]
        assert pool.size == len(ref)


@given(st.lists(st.integers(0, 1000), min_size=1, max_size=60), st.data())
def test_select_smallest(keys, data):
    from spacegraph.bits import IntVec
    k = data.draw(st.integers(1, len(keys)))
    n = len(keys)
    kv, vv, pv = IntVec(n, 10), IntVec(n, 10), IntVec(n, 10)
    for i, x in enumerate(keys):
        kv[i], vv[i], pv[i] = x, i, i
    _select_smallest(kv, vv, pv, n, k)
    got = sorted(kv[i] for i in range(k))
    assert got == sorted(keys)[:k]
    assert all(keys[vv[i]] == kv[i] for i in range(n))
