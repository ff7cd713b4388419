import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spacegraph.decseq import DecrementSeq


def _drive(ds, xs, rng, steps):
    ref = list(xs)
    worst = 0
    for _ in range(steps):
        i = rng.randrange(len(ref))
        before = ds.probes
        if rng.random() < 0.7:
            assert ds.dec_if_nonzero(i) == (ref[i] > 0)
            ref[i] = max(0, ref[i] - 1)
        else:
            assert ds.is_zero(i) == (ref[i] == 0)
        worst = max(worst, ds.probes - before)
    return ref, worst


@given(st.lists(st.integers(0, 40), min_size=1, max_size=60), st.integers(0, 999))
@settings(max_examples=80)
def test_small_cells_match_counters(xs, seed):
    ds = DecrementSeq(xs)
    ref, _ = _drive(ds, xs, random.Random(seed), 400)
    assert [ds.value(i) for i in range(len(xs))] == ref


def test_large_cells_match_counters():
    rng = random.Random(5)
    xs = [rng.choice([0, 1, 3, 2000, 5000, 300]) for _ in range(200)]
    ds = DecrementSeq(xs)
    ref, worst = _drive(ds, xs, rng, 60_000)
    assert [ds.value(i) for i in range(len(xs))] == ref
    assert worst <= 64


def test_drain_large_cell_to_zero():
    ds = DecrementSeq([0, 3000, 0])
    for _ in range(3000):
        assert ds.dec_if_nonzero(1)
    assert ds.is_zero(1)
    assert not ds.dec_if_nonzero(1)


def test_bits_bound_and_audit():
    rng = random.Random(9)
    xs = [rng.randrange(0, 9) for _ in range(1 << 14)]
    ds = DecrementSeq(xs)
    p, a = ds.bit_usage()
    assert p + a == 64 * ds.words_allocated()
    assert p + a <= ds.m + 2 * ds.n + 0.7 * (ds.m + ds.n)


def test_errors():
    with pytest.raises(ValueError):
        DecrementSeq([1, -1])
    ds = DecrementSeq([1, 2])
    with pytest.raises(IndexError):
        ds.is_zero(2)


def test_empty_and_zero_sequences():
    ds = DecrementSeq([0, 0, 0])
    assert ds.m == 0
    assert all(ds.is_zero(i) for i in range(3))
