# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled word kernels and findany set.

Drop-in replacement for ``_pykernels`` and ``_pyfindany``; selected at
import time by ``spacegraph._backend``.
"""

from cpython cimport array
import array as _array

from spacegraph._layout import FindAnyLayout, words_for

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int _popc(u64 x) nogil:
    return __builtin_popcountll(x)


cdef inline int _ctz(u64 x) nogil:
    return __builtin_ctzll(x)


cdef inline u64 _rd(u64* w, Py_ssize_t pos, int width) nogil:
    cdef Py_ssize_t q = pos >> 6
    cdef int r = pos & 63
    cdef u64 x = w[q] >> r
    if r + width > 64:
        x |= w[q + 1] << (64 - r)
    if width == 64:
        return x
    return x & ((<u64>1 << width) - 1)


cdef inline void _wr(u64* w, Py_ssize_t pos, int width, u64 value) nogil:
    cdef Py_ssize_t q = pos >> 6
    cdef int r = pos & 63
    cdef u64 mask = (<u64>0 - 1) if width == 64 else ((<u64>1 << width) - 1)
    w[q] = (w[q] & ~(mask << r)) | (value << r)
    cdef int spill
    if r + width > 64:
        spill = 64 - r
        w[q + 1] = (w[q + 1] & ~(mask >> spill)) | (value >> spill)


cdef inline int _fsa(u64 word, int i) nogil:
    if i >= 64:
        return -1
    cdef u64 x = (word >> i) << i
    if x == 0:
        return -1
    return _ctz(x)


def popcount(u64 x):
    return _popc(x)


def first_set_after(u64 word, int i):
    return _fsa(word, i)


def select_in_word(u64 word, int k):
    cdef int shift = 0, c
    cdef u64 b
    if k <= 0:
        return -1
    while shift < 64:
        b = (word >> shift) & 0xFF
        c = _popc(b)
        if c >= k:
            while True:
                k -= 1
                if k == 0:
                    return shift + _ctz(b)
                b &= b - 1
        k -= c
        shift += 8
    return -1


def read_bits(array.array words, Py_ssize_t pos, int width):
    return _rd(words.data.as_ulonglongs, pos, width)


def write_bits(array.array words, Py_ssize_t pos, int width, u64 value):
    _wr(words.data.as_ulonglongs, pos, width, value)


def block_popcounts(array.array words, Py_ssize_t words_per_block):
    cdef Py_ssize_t nw = len(words)
    cdef Py_ssize_t nb = (nw + words_per_block - 1) // words_per_block
    cdef array.array out = _array.array("Q", bytes(8 * nb))
    cdef u64* w = words.data.as_ulonglongs
    cdef u64* o = out.data.as_ulonglongs
    cdef Py_ssize_t i
    for i in range(nw):
        o[i // words_per_block] += _popc(w[i])
    return out


def packed_get(array.array words, Py_ssize_t i, u64 c, Py_ssize_t t, powers):
    cdef Py_ssize_t q = i // t
    cdef u64 p = powers[i - q * t]
    return (words.data.as_ulonglongs[q] // p) % c


def packed_set(array.array words, Py_ssize_t i, u64 c, Py_ssize_t t, powers,
               u64 value):
    cdef Py_ssize_t q = i // t
    cdef u64 p = powers[i - q * t]
    cdef u64 w = words.data.as_ulonglongs[q]
    cdef u64 old = (w // p) % c
    words.data.as_ulonglongs[q] = w - old * p + value * p


def _alloc(Py_ssize_t nwords, garbage):
    if garbage is None:
        return _array.array("Q", bytes(8 * nwords))
    return _array.array("Q", [garbage.getrandbits(64) for _ in range(nwords)])


cdef class FindAnySet:
    """Compiled findany set; see ``spacegraph._pyfindany.FindAnySet``."""

    cdef public object layout
    cdef public Py_ssize_t n
    cdef public bint lazy
    cdef public array.array S, number, bq, barr, sql, sq, sarr
    cdef public Py_ssize_t bq_len, size
    cdef public long long probes
    cdef Py_ssize_t B, sb, spb
    cdef int num_w, bq_w, sql_w, sq_w

    backend = "cython"

    def __init__(self, n, lazy=False, garbage=None):
        lay = FindAnyLayout(n)
        self.layout = lay
        self.n = n
        self.lazy = bool(lazy)
        if garbage is not None and not self.lazy:
            raise ValueError("garbage-filled memory requires lazy mode")
        self.S = _alloc(lay.s_words(), garbage)
        arrs = [_alloc(words_for(c * w), garbage) for _, c, w in lay.aux_fields()]
        self.number, self.bq, self.barr, self.sql, self.sq, self.sarr = arrs
        self.bq_len = 0
        self.size = 0
        self.probes = 0
        self.B = lay.block
        self.sb = lay.sub
        self.spb = lay.per_block
        self.num_w = lay.num_w
        self.bq_w = lay.bq_w
        self.sql_w = lay.sql_w
        self.sq_w = lay.sq_w

    cdef inline Py_ssize_t _block_slot(self, Py_ssize_t b):
        cdef Py_ssize_t j = _rd(self.barr.data.as_ulonglongs, b * self.bq_w, self.bq_w)
        self.probes += 1
        if j < self.bq_len:
            self.probes += 1
            if <Py_ssize_t>_rd(self.bq.data.as_ulonglongs, j * self.bq_w, self.bq_w) == b:
                return j
        return -1

    cdef inline Py_ssize_t _sub_slot(self, Py_ssize_t b, Py_ssize_t g):
        cdef int sqw = self.sq_w
        cdef Py_ssize_t t = _rd(self.sarr.data.as_ulonglongs, (b * self.spb + g) * sqw, sqw)
        cdef Py_ssize_t ln = _rd(self.sql.data.as_ulonglongs, b * self.sql_w, self.sql_w)
        self.probes += 2
        if t < ln:
            self.probes += 1
            if <Py_ssize_t>_rd(self.sq.data.as_ulonglongs, (b * self.spb + t) * sqw, sqw) == g:
                return t
        return -1

    cdef inline void _check(self, Py_ssize_t i) except *:
        if i < 0 or i >= self.n:
            raise IndexError(f"element {i} outside universe [0, {self.n})")

    cpdef bint contains(self, Py_ssize_t i) except *:
        self._check(i)
        cdef Py_ssize_t b, off
        if self.lazy:
            b = i // self.B
            off = i - b * self.B
            if self._block_slot(b) < 0 or self._sub_slot(b, off // self.sb) < 0:
                return False
        self.probes += 1
        return (self.S.data.as_ulonglongs[i >> 6] >> (i & 63)) & 1

    def __contains__(self, i):
        return self.contains(i)

    cpdef insert(self, Py_ssize_t i):
        self._check(i)
        cdef Py_ssize_t b = i // self.B
        cdef Py_ssize_t g = (i - b * self.B) // self.sb
        cdef Py_ssize_t j, t
        cdef int sqw = self.sq_w
        cdef u64* S = self.S.data.as_ulonglongs
        cdef u64 c
        if self._block_slot(b) < 0:
            j = self.bq_len
            _wr(self.bq.data.as_ulonglongs, j * self.bq_w, self.bq_w, b)
            _wr(self.barr.data.as_ulonglongs, b * self.bq_w, self.bq_w, j)
            _wr(self.sql.data.as_ulonglongs, b * self.sql_w, self.sql_w, 0)
            _wr(self.number.data.as_ulonglongs, b * self.num_w, self.num_w, 0)
            self.bq_len = j + 1
            self.probes += 4
        if self._sub_slot(b, g) < 0:
            _wr(S, b * self.B + g * self.sb, self.sb, 0)
            t = _rd(self.sql.data.as_ulonglongs, b * self.sql_w, self.sql_w)
            _wr(self.sq.data.as_ulonglongs, (b * self.spb + t) * sqw, sqw, g)
            _wr(self.sarr.data.as_ulonglongs, (b * self.spb + g) * sqw, sqw, t)
            _wr(self.sql.data.as_ulonglongs, b * self.sql_w, self.sql_w, t + 1)
            self.probes += 5
        self.probes += 1
        if not (S[i >> 6] >> (i & 63)) & 1:
            S[i >> 6] |= (<u64>1) << (i & 63)
            c = _rd(self.number.data.as_ulonglongs, b * self.num_w, self.num_w)
            _wr(self.number.data.as_ulonglongs, b * self.num_w, self.num_w, c + 1)
            self.size += 1
            self.probes += 3

    def add(self, i):
        self.insert(i)

    cpdef delete(self, Py_ssize_t i):
        self._check(i)
        cdef Py_ssize_t b = i // self.B
        cdef Py_ssize_t g = (i - b * self.B) // self.sb
        cdef Py_ssize_t j, t, last, lg_, lb
        cdef int sqw = self.sq_w, bqw = self.bq_w
        cdef u64* S = self.S.data.as_ulonglongs
        cdef u64 c
        if self.lazy:
            if self._block_slot(b) < 0 or self._sub_slot(b, g) < 0:
                return
        self.probes += 1
        if not (S[i >> 6] >> (i & 63)) & 1:
            return
        S[i >> 6] &= ~((<u64>1) << (i & 63))
        self.size -= 1
        c = _rd(self.number.data.as_ulonglongs, b * self.num_w, self.num_w) - 1
        _wr(self.number.data.as_ulonglongs, b * self.num_w, self.num_w, c)
        self.probes += 3
        if _rd(S, b * self.B + g * self.sb, self.sb) == 0:
            t = _rd(self.sarr.data.as_ulonglongs, (b * self.spb + g) * sqw, sqw)
            last = _rd(self.sql.data.as_ulonglongs, b * self.sql_w, self.sql_w) - 1
            lg_ = _rd(self.sq.data.as_ulonglongs, (b * self.spb + last) * sqw, sqw)
            _wr(self.sq.data.as_ulonglongs, (b * self.spb + t) * sqw, sqw, lg_)
            _wr(self.sarr.data.as_ulonglongs, (b * self.spb + lg_) * sqw, sqw, t)
            _wr(self.sql.data.as_ulonglongs, b * self.sql_w, self.sql_w, last)
            self.probes += 7
        if c == 0:
            j = _rd(self.barr.data.as_ulonglongs, b * bqw, bqw)
            last = self.bq_len - 1
            lb = _rd(self.bq.data.as_ulonglongs, last * bqw, bqw)
            _wr(self.bq.data.as_ulonglongs, j * bqw, bqw, lb)
            _wr(self.barr.data.as_ulonglongs, lb * bqw, bqw, j)
            self.bq_len = last
            self.probes += 4

    def discard(self, i):
        self.delete(i)

    cpdef findany(self):
        if self.bq_len == 0:
            return None
        cdef Py_ssize_t b = _rd(self.bq.data.as_ulonglongs, (self.bq_len - 1) * self.bq_w, self.bq_w)
        cdef Py_ssize_t g = _rd(self.sq.data.as_ulonglongs, b * self.spb * self.sq_w, self.sq_w)
        cdef Py_ssize_t base = b * self.B + g * self.sb
        cdef u64 word = _rd(self.S.data.as_ulonglongs, base, self.sb)
        self.probes += 3
        return base + _fsa(word, 0)

    def enumerate(self):
        cdef Py_ssize_t j, b, ln, t, g, base
        cdef int p
        cdef u64 word
        for j in range(self.bq_len):
            b = _rd(self.bq.data.as_ulonglongs, j * self.bq_w, self.bq_w)
            ln = _rd(self.sql.data.as_ulonglongs, b * self.sql_w, self.sql_w)
            for t in range(ln):
                g = _rd(self.sq.data.as_ulonglongs, (b * self.spb + t) * self.sq_w, self.sq_w)
                base = b * self.B + g * self.sb
                word = _rd(self.S.data.as_ulonglongs, base, self.sb)
                p = _fsa(word, 0)
                while p >= 0:
                    yield base + p
                    p = _fsa(word, p + 1)

    def __iter__(self):
        return self.enumerate()

    def __len__(self):
        return self.size

    def buffers(self):
        return {"S": self.S, "number": self.number, "block_queue": self.bq,
                "block_array": self.barr, "sub_queue_len": self.sql,
                "sub_queue": self.sq, "sub_block_array": self.sarr}

    def bit_usage(self):
        lay = self.layout
        return 64 * lay.s_words(), 64 * lay.aux_words()

    def words_allocated(self):
        return sum(len(a) for a in self.buffers().values())
