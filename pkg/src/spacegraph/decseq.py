"""Sequence of non-negative counters with constant-time is-zero and decrement.

Cell ``i`` with initial value ``x_i`` owns ``x_i`` consecutive bits of a
shared bit string ``S`` (its current set, initially full). The cell
boundaries never move, so they sit in a static Elias-Fano index: one
select finds a cell's start and a short scan usually finds its end. Cells no longer than one block are scanned word by word; larger
cells keep a findany index (block queue plus per-block sub-block queues)
in a shared arena at an offset proportional to the cell's start, so the
arena needs no per-cell directory.
"""

from fractions import Fraction

from ._backend import kernels as _k
from ._layout import FindAnyLayout, ceil_div, width_for
from .bits import BitStore, EliasFano

_read = _k.read_bits
_write = _k.write_bits
_first = _k.first_set_after


class DecrementSeq:
    SCAN_WORDS = 4

    def __init__(self, xs):
        xs = [int(x) for x in xs]
        for x in xs:
            if x < 0:
                raise ValueError("values must be non-negative")
        n = len(xs)
        m = sum(xs)
        self.n = n
        self.m = m
        self.probes = 0
        lay = FindAnyLayout(max(2, m + n))
        self.sub = lay.sub
        self.block = lay.block
        self.per_block = lay.per_block
        # one field width for every cell, large enough for the biggest
        self._bw = width_for(ceil_div(max(xs, default=1) or 1, lay.block))
        self._sqlw = lay.sql_w
        self._sqw = lay.sq_w
        self._k = self._arena_rate()
        self.S = BitStore(m)
        starts = [0] * (n + 1)
        for i, x in enumerate(xs):
            starts[i + 1] = starts[i] + x
        self.bounds = EliasFano(starts, m)
        self._fill_S()
        # the arena only has to reach the end of the last large cell
        start = reach = 0
        for x in xs:
            start += x
            if x > self.block:
                reach = start
        self.arena = BitStore(int(self._k * reach) + 1 if reach else 0)
        start = 0
        for x in xs:
            if x > self.block:
                self._build_cell(start, x)
            start += x

    # -- layout ---------------------------------------------------------

    def _arena_rate(self):
        """Rational upper bound on aux bits per element of a large cell."""
        B, sb = self.block, self.sub
        bw, sqlw, sqw = self._bw, self._sqlw, self._sqw
        # x > B gives nblocks <= 2x/B and nsub <= x/sb + x/B
        return (Fraction(bw, B) + Fraction(2 * (2 * bw + sqlw), B)
                + 2 * sqw * (Fraction(1, sb) + Fraction(1, B)))

    def _fill_S(self):
        w = self.S.words
        full = 0xFFFFFFFFFFFFFFFF
        for q in range(len(w)):
            w[q] = full
        r = self.m & 63
        if r:
            w[-1] = (1 << r) - 1
        elif self.m == 0:
            w[0] = 0

    def _cell_fields(self, start, x):
        """Bit offsets of (bq_len, bq, barr, sql, sq, sarr) for a large cell."""
        nblocks = ceil_div(x, self.block)
        nsub = ceil_div(x, self.sub)
        bw, sqlw, sqw = self._bw, self._sqlw, self._sqw
        base = (start * self._k.numerator) // self._k.denominator
        bq = base + bw
        barr = bq + nblocks * bw
        sql = barr + nblocks * bw
        sq = sql + nblocks * sqlw
        sarr = sq + nsub * sqw
        return base, bq, barr, sql, sq, sarr

    def _build_cell(self, start, x):
        a = self.arena.words
        bw, sqlw, sqw = self._bw, self._sqlw, self._sqw
        spb = self.per_block
        base, bq, barr, sql, sq, sarr = self._cell_fields(start, x)
        nblocks = ceil_div(x, self.block)
        nsub = ceil_div(x, self.sub)
        _write(a, base, bw, nblocks)
        for b in range(nblocks):
            _write(a, bq + b * bw, bw, b)
            _write(a, barr + b * bw, bw, b)
            _write(a, sql + b * sqlw, sqlw, min(spb, nsub - b * spb))
        for g in range(nsub):
            _write(a, sq + g * sqw, sqw, g % spb)
            _write(a, sarr + g * sqw, sqw, g % spb)

    def _locate(self, i):
        """(start in S, length) of cell i."""
        if not 0 <= i < self.n:
            raise IndexError(f"cell {i} outside [0, {self.n})")
        ef = self.bounds
        before = ef.probes
        p = ef.high_position(i)
        self.probes += ef.probes - before
        start = ef.value_at(i, p)
        # the next marker is usually a few words away
        hw = ef.high.words
        q = p + 1
        for _ in range(self.SCAN_WORDS):
            self.probes += 1
            f = _first(hw[q >> 6], q & 63)
            if f >= 0:
                return start, ef.value_at(i + 1, (q & ~63) + f) - start
            q = (q | 63) + 1
        before = ef.probes
        q = ef.high_position(i + 1)
        self.probes += ef.probes - before
        return start, ef.value_at(i + 1, q) - start

    # -- small cells ------------------------------------------------------

    def _scan_first(self, start, x):
        """Lowest set position of S in [start, start + x), or -1."""
        w = self.S.words
        end = start + x
        q = start
        while q < end:
            self.probes += 1
            word = w[q >> 6] >> (q & 63)
            span = min(64 - (q & 63), end - q)
            word &= (1 << span) - 1
            if word:
                return q + ((word & -word).bit_length() - 1)
            q += span
        return -1

    # -- large cells ------------------------------------------------------

    def _large_first(self, start, x):
        a = self.arena.words
        bw, sqlw, sqw = self._bw, self._sqlw, self._sqw
        base, bq, barr, sql, sq, sarr = self._cell_fields(start, x)
        ln = _read(a, base, bw)
        self.probes += 1
        if ln == 0:
            return -1
        b = _read(a, bq + (ln - 1) * bw, bw)
        g = _read(a, sq + b * self.per_block * sqw, sqw)
        off = b * self.block + g * self.sub
        word = _read(self.S.words, start + off, min(self.sub, x - off))
        self.probes += 3
        return start + off + ((word & -word).bit_length() - 1)

    def _large_delete(self, start, x, e):
        """Clear S at cell offset e and repair the cell's queues."""
        a = self.arena.words
        S = self.S.words
        bw, sqlw, sqw = self._bw, self._sqlw, self._sqw
        spb = self.per_block
        base, bq, barr, sql, sq, sarr = self._cell_fields(start, x)
        p = start + e
        S[p >> 6] &= ~(1 << (p & 63)) & 0xFFFFFFFFFFFFFFFF
        b, off = divmod(e, self.block)
        g = off // self.sub
        goff = b * self.block + g * self.sub
        self.probes += 2
        if _read(S, start + goff, min(self.sub, x - goff)):
            return
        gg = b * spb + g
        t = _read(a, sarr + gg * sqw, sqw)
        last = _read(a, sql + b * sqlw, sqlw) - 1
        lg_ = _read(a, sq + (b * spb + last) * sqw, sqw)
        _write(a, sq + (b * spb + t) * sqw, sqw, lg_)
        _write(a, sarr + (b * spb + lg_) * sqw, sqw, t)
        _write(a, sql + b * sqlw, sqlw, last)
        self.probes += 6
        if last:
            return
        ln = _read(a, base, bw)
        j = _read(a, barr + b * bw, bw)
        lb = _read(a, bq + (ln - 1) * bw, bw)
        _write(a, bq + j * bw, bw, lb)
        _write(a, barr + lb * bw, bw, j)
        _write(a, base, bw, ln - 1)
        self.probes += 6

    # -- public -----------------------------------------------------------

    def is_zero(self, i):
        start, x = self._locate(i)
        if x == 0:
            return True
        if x <= self.block:
            return self._scan_first(start, x) < 0
        return self._large_first(start, x) < 0

    def dec_if_nonzero(self, i):
        """Decrement cell ``i`` if it is positive; report whether it was."""
        start, x = self._locate(i)
        if x == 0:
            return False
        if x <= self.block:
            p = self._scan_first(start, x)
            if p < 0:
                return False
            self.S.words[p >> 6] &= ~(1 << (p & 63)) & 0xFFFFFFFFFFFFFFFF
            self.probes += 1
            return True
        p = self._large_first(start, x)
        if p < 0:
            return False
        self._large_delete(start, x, p - start)
        return True

    def value(self, i):
        """Current value by counting; O(x_i), for checking only."""
        start, x = self._locate(i)
        return sum(self.S[start + j] for j in range(x))

    def __len__(self):
        return self.n

    def bit_usage(self):
        principal = self.S.bit_usage()[0]
        aux = self.bounds.bit_usage()[1] + self.arena.bit_usage()[0]
        return principal, aux

    def words_allocated(self):
        return (self.S.words_allocated() + self.bounds.words_allocated()
                + self.arena.words_allocated())


def build(xs):
    return DecrementSeq(xs)
