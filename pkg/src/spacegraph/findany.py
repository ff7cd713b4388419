"""Constant-time dynamic sets over ``range(n)`` with findany.

:class:`FindAnySet` comes from the compiled core when available (see
``spacegraph._backend``). :class:`FindAnyPartition` splits the universe
into ``c`` classes and keeps a findany index on chosen classes.
"""

from array import array

from ._backend import BACKEND, FindAnySet, kernels as _k
from ._layout import ceil_div, ceil_lg, width_for, words_for

__all__ = ["BACKEND", "FindAnySet", "FindAnyPartition", "new_lazy"]

_read = _k.read_bits
_write = _k.write_bits


def new_lazy(n, garbage=None):
    """Empty set built without touching its backing memory."""
    return FindAnySet(n, lazy=True, garbage=garbage)


def _replicate(value, width, count):
    out = 0
    for f in range(count):
        out |= value << (f * width)
    return out


class _ClassIndex:
    """Block queue and per-block sub-block bitmaps for one class."""

    __slots__ = ("bq", "barr", "bmap", "bq_len", "size")

    def __init__(self, nblocks, bq_w, per_block):
        self.bq = array("Q", bytes(8 * words_for(nblocks * bq_w)))
        self.barr = array("Q", bytes(8 * words_for(nblocks * bq_w)))
        self.bmap = array("Q", bytes(8 * words_for(nblocks * per_block)))
        self.bq_len = 0
        self.size = 0

    def words(self):
        return len(self.bq) + len(self.barr) + len(self.bmap)


class FindAnyPartition:
    """Partition of ``range(n)`` into classes ``0..c-1``.

    Class labels live in fixed ``ceil(lg c)``-bit fields; one word of labels
    forms a sub-block, so the members of class ``k`` in a sub-block are found
    with a few word operations. Blocks group at most 64 sub-blocks, and each
    tracked class keeps, per block, a bitmap of the sub-blocks holding its
    members plus a queue of blocks whose bitmap is non-zero. Classes not in
    ``tracked`` support ``class_of`` and ``move`` but not findany.
    """

    def __init__(self, n, c, initial=0, tracked=None):
        if c < 2:
            raise ValueError("class count must be >= 2")
        if n < 1:
            raise ValueError("universe size must be >= 1")
        if not 0 <= initial < c:
            raise ValueError(f"initial class {initial} outside [0, {c})")
        self.n = n
        self.c = c
        w = (c - 1).bit_length()
        self.width = w
        sb = 64 // w
        lg = max(2, ceil_lg(n))
        spb = min(64, max(1, ceil_div(lg * lg, sb)))
        self._sb = sb
        self._spb = spb
        self._B = sb * spb
        self.nblocks = ceil_div(n, self._B)
        self.nsub = ceil_div(n, sb)
        self._bqw = width_for(self.nblocks - 1)
        self._high = _replicate(1 << (w - 1), w, sb)
        self._low = _replicate((1 << (w - 1)) - 1, w, sb)
        self._ones = _replicate(1, w, sb)
        self.S = array("Q", bytes(8 * words_for(self.nsub * sb * w)))
        if initial:
            for i in range(n):
                _write(self.S, i * w, w, initial)
        tracked = range(c) if tracked is None else sorted(set(tracked))
        for k in tracked:
            if not 0 <= k < c:
                raise ValueError(f"tracked class {k} outside [0, {c})")
        self._idx = {k: _ClassIndex(self.nblocks, self._bqw, spb) for k in tracked}
        self.probes = 0
        if initial in self._idx:
            self._fill(self._idx[initial])

    # -- word-level helpers -------------------------------------------

    def _class_mask(self, g, k):
        """High bit of each field of sub-block g whose label is k."""
        sb, w = self._sb, self.width
        y = _read(self.S, g * sb * w, sb * w) ^ (k * self._ones)
        nonzero = (((y & self._low) + self._low) | y) & self._high
        m = ~nonzero & self._high
        tail = self.n - g * sb
        if tail < sb:
            m &= (1 << (tail * w)) - 1
        return m

    def _fill(self, ix):
        """Index every element (the whole universe starts in one class)."""
        bqw, spb = self._bqw, self._spb
        for b in range(self.nblocks):
            _write(ix.bq, b * bqw, bqw, b)
            _write(ix.barr, b * bqw, bqw, b)
            cnt = min(spb, self.nsub - b * spb)
            _write(ix.bmap, b * spb, spb, (1 << cnt) - 1)
        ix.bq_len = self.nblocks
        ix.size = self.n

    # -- per-class queue maintenance ---------------------------------

    def _gain(self, ix, i, k):
        bqw, spb = self._bqw, self._spb
        b, off = divmod(i, self._B)
        g = off // self._sb
        bm = _read(ix.bmap, b * spb, spb)
        bit = 1 << g
        self.probes += 1
        if not bm & bit:
            if not bm:
                j = ix.bq_len
                _write(ix.bq, j * bqw, bqw, b)
                _write(ix.barr, b * bqw, bqw, j)
                ix.bq_len = j + 1
                self.probes += 2
            _write(ix.bmap, b * spb, spb, bm | bit)
            self.probes += 1
        ix.size += 1

    def _lose(self, ix, i, k):
        """Called after S[i] has already been changed away from k."""
        bqw, spb = self._bqw, self._spb
        b, off = divmod(i, self._B)
        g = off // self._sb
        ix.size -= 1
        self.probes += 1
        if self._class_mask(b * spb + g, k):
            return
        bm = _read(ix.bmap, b * spb, spb) & ~(1 << g)
        _write(ix.bmap, b * spb, spb, bm)
        self.probes += 2
        if bm:
            return
        j = _read(ix.barr, b * bqw, bqw)
        last = ix.bq_len - 1
        lb = _read(ix.bq, last * bqw, bqw)
        _write(ix.bq, j * bqw, bqw, lb)
        _write(ix.barr, lb * bqw, bqw, j)
        ix.bq_len = last
        self.probes += 4

    # -- public operations --------------------------------------------

    def _check(self, i):
        if not 0 <= i < self.n:
            raise IndexError(f"element {i} outside universe [0, {self.n})")

    def _check_class(self, k):
        if not 0 <= k < self.c:
            raise ValueError(f"class {k} outside [0, {self.c})")

    def _index(self, k):
        self._check_class(k)
        ix = self._idx.get(k)
        if ix is None:
            raise ValueError(f"class {k} is not tracked")
        return ix

    def class_of(self, i):
        self._check(i)
        self.probes += 1
        return _read(self.S, i * self.width, self.width)

    __getitem__ = class_of

    def move(self, i, k):
        """Reassign element ``i`` to class ``k``."""
        self._check(i)
        self._check_class(k)
        w = self.width
        old = _read(self.S, i * w, w)
        self.probes += 1
        if old == k:
            return
        _write(self.S, i * w, w, k)
        ix = self._idx.get(old)
        if ix is not None:
            self._lose(ix, i, old)
        ix = self._idx.get(k)
        if ix is not None:
            self._gain(ix, i, k)

    def _first_in_block(self, ix, b, k):
        bm = _read(ix.bmap, b * self._spb, self._spb)
        g = b * self._spb + (bm & -bm).bit_length() - 1
        m = self._class_mask(g, k)
        return g * self._sb + ((m & -m).bit_length() - 1) // self.width

    def findany_in(self, k):
        ix = self._index(k)
        if ix.bq_len == 0:
            return None
        b = _read(ix.bq, (ix.bq_len - 1) * self._bqw, self._bqw)
        self.probes += 3
        return self._first_in_block(ix, b, k)

    def enumerate_class(self, k):
        ix = self._index(k)
        spb, w = self._spb, self.width
        for j in range(ix.bq_len):
            b = _read(ix.bq, j * self._bqw, self._bqw)
            bm = _read(ix.bmap, b * spb, spb)
            while bm:
                low = bm & -bm
                bm ^= low
                g = b * spb + low.bit_length() - 1
                m = self._class_mask(g, k)
                while m:
                    h = m & -m
                    yield g * self._sb + (h.bit_length() - 1) // w
                    m ^= h

    def class_size(self, k):
        return self._index(k).size

    def is_empty(self, k):
        return self._index(k).bq_len == 0

    # -- accounting -----------------------------------------------------

    def bit_usage(self):
        aux = sum(ix.words() for ix in self._idx.values())
        return 64 * len(self.S), 64 * aux

    def words_allocated(self):
        return len(self.S) + sum(ix.words() for ix in self._idx.values())
