import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spacegraph.bits import BitStore, IntVec, PackedVec, RankSelect, first_set_after, symbols_per_word

words64 = st.integers(min_value=0, max_value=(1 << 64) - 1)


@given(words64, st.integers(0, 64))
def test_first_set_after_matches_scan(word, i):
    want = next((p for p in range(i, 64) if word >> p & 1), None)
    assert first_set_after(word, i) == want


def test_first_set_after_range():
    with pytest.raises(ValueError):
        first_set_after(1, 65)


@given(words=st.lists(words64, min_size=1, max_size=20), data=st.data())
def test_kernels_agree_with_brute_force(backend, words, data):
    _, k, _ = backend
    for w in words:
        assert k.popcount(w) == bin(w).count("1")
        ones = [p for p in range(64) if w >> p & 1]
        for r, p in enumerate(ones, 1):
            assert k.select_in_word(w, r) == p
        assert k.select_in_word(w, len(ones) + 1) == -1
        i = data.draw(st.integers(0, 63))
        assert k.first_set_after(w, i) == next((p for p in ones if p >= i), -1)


@given(st.data())
@settings(max_examples=60)
def test_read_write_bits(backend, data):
    from array import array
    _, k, _ = backend
    nbits = 64 * 4
    words = array("Q", [0] * 4)
    ref = [0] * nbits
    for _ in range(20):
        width = data.draw(st.integers(1, 64))
        pos = data.draw(st.integers(0, nbits - width))
        value = data.draw(st.integers(0, (1 << width) - 1))
        k.write_bits(words, pos, width, value)
        for j in range(width):
            ref[pos + j] = value >> j & 1
        assert k.read_bits(words, pos, width) == value
    for p in range(nbits):
        assert (words[p >> 6] >> (p & 63)) & 1 == ref[p]


def test_block_popcounts(backend):
    from array import array
    _, k, _ = backend
    rng = random.Random(1)
    words = array("Q", [rng.getrandbits(64) for _ in range(37)])
    got = list(k.block_popcounts(words, 8))
    want = [sum(bin(w).count("1") for w in words[i:i + 8]) for i in range(0, 37, 8)]
    assert got == want


@given(st.lists(st.booleans(), max_size=300))
def test_bitstore_roundtrip(bits):
    b = BitStore.from_bits(bits)
    assert list(b) == [int(x) for x in bits]
    assert b.count() == sum(bits)
    assert b.bit_usage() == (64 * len(b.words), 0)


def test_bitstore_errors_and_string():
    b = BitStore.from_string("0110")
    assert [b[i] for i in range(4)] == [0, 1, 1, 0]
    with pytest.raises(IndexError):
        b[4]
    with pytest.raises(IndexError):
        b[-1] = 1


@given(st.integers(1, 64), st.lists(st.integers(0), min_size=1, max_size=50))
def test_intvec(width, values):
    values = [x % (1 << width) for x in values]
    v = IntVec(len(values), width)
    for i, x in enumerate(values):
        v[i] = x
    assert [v[i] for i in range(len(values))] == values
    with pytest.raises(ValueError):
        v[0] = 1 << width


def test_symbols_per_word():
    assert symbols_per_word(2) == 64
    assert symbols_per_word(3) == 40
    assert 3 ** 40 < 2 ** 64 <= 3 ** 41


@given(st.integers(2, 7), st.lists(st.integers(0, 6), max_size=200))
def test_packedvec(c, syms):
    syms = [s % c for s in syms]
    p = PackedVec(len(syms), c, fill=c - 1)
    assert all(p[i] == c - 1 for i in range(len(syms)))
    for i, s in enumerate(syms):
        p[i] = s
    assert [p[i] for i in range(len(syms))] == syms
    if syms:
        with pytest.raises(ValueError):
            p[0] = c


def test_packedvec_radix3_density():
    p = PackedVec(4000, 3)
    assert len(p.words) == 100  # 40 trits per word


@pytest.mark.parametrize("n,density", [(1, 0.5), (700, 0.5), (5000, 0.02), (70000, 0.9)])
def test_rank_select_matches_brute_force(n, density):
    rng = random.Random(n)
    bits = [1 if rng.random() < density else 0 for _ in range(n)]
    rs = RankSelect(BitStore.from_bits(bits))
    prefix = [0]
    for b in bits:
        prefix.append(prefix[-1] + b)
    for i in list(range(0, n + 1, max(1, n // 300))) + [n]:
        assert rs.rank1(i) == prefix[i]
        assert rs.rank0(i) == i - prefix[i]
    ones = [i for i, b in enumerate(bits) if b]
    zeros = [i for i, b in enumerate(bits) if not b]
    for k in range(1, len(ones) + 1, max(1, len(ones) // 300)):
        assert rs.select1(k) == ones[k - 1]
    for k in range(1, len(zeros) + 1, max(1, len(zeros) // 300)):
        assert rs.select0(k) == zeros[k - 1]
    assert rs.ones == len(ones) and rs.zeros == len(zeros)
    with pytest.raises(IndexError):
        rs.select1(len(ones) + 1)
    with pytest.raises(IndexError):
        rs.rank1(n + 1)


def test_rank_select_aux_is_small():
    n = 1 << 20
    rs = RankSelect(BitStore(n))
    principal, aux = rs.bit_usage()
    assert principal == 0
    assert aux < 0.1 * n
