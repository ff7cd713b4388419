import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spacegraph import oracles
from spacegraph.generate import dag, grid
from spacegraph.graph import from_edges
from spacegraph.order import degeneracy_order, toposort

from conftest import random_graph


@given(st.integers(1, 60), st.floats(0.0, 0.3), st.integers(0, 999))
@settings(max_examples=60, deadline=None)
def test_toposort_on_dags(n, p, seed):
    g = dag(n, p, seed=seed)
    res = toposort(g)
    assert res.ok and oracles.topo_valid(g, res.order)


@given(st.integers(1, 40), st.integers(0, 120), st.integers(0, 999))
@settings(max_examples=60, deadline=None)
def test_toposort_verdict(n, m, seed):
    g = random_graph(random.Random(seed), n, m, directed=True)
    res = toposort(g)
    assert res.ok == (not oracles.has_cycle(g))
    if res.ok:
        assert oracles.topo_valid(g, res.order)


@given(st.integers(1, 40), st.integers(0, 150), st.integers(0, 6), st.integers(0, 999))
@settings(max_examples=80, deadline=None)
def test_degeneracy_verdict(n, m, d, seed):
    g = random_graph(random.Random(seed), n, m)
    res = degeneracy_order(g, d)
    assert res.ok == (d >= oracles.degeneracy(g))
    if res.ok:
        assert oracles.degeneracy_valid(g, res.order, d)
    assert res.ledger.audit() == []


def test_grid_is_2_degenerate():
    g = grid(36)
    assert degeneracy_order(g, 2).ok
    assert not degeneracy_order(g, 1).ok


def test_two_cycle_detected():
    assert not toposort(from_edges(2, [(0, 1), (1, 0)], directed=True)).ok


def test_preconditions():
    with pytest.raises(ValueError):
        toposort(from_edges(2, [(0, 1)]))
    with pytest.raises(ValueError):
        degeneracy_order(from_edges(2, [(0, 1)], directed=True), 1)
    with pytest.raises(ValueError):
        degeneracy_order(from_edges(2, [(0, 1)]), -1)
