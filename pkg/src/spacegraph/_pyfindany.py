"""Pure-Python findany set; behaviour-identical to the compiled one."""

from array import array

from ._layout import FindAnyLayout, words_for
from ._pykernels import first_set_after, read_bits, write_bits


def _alloc(nwords, garbage):
    if garbage is None:
        return array("Q", bytes(8 * nwords))
    return array("Q", (garbage.getrandbits(64) for _ in range(nwords)))


class FindAnySet:
    """Subset of ``range(n)`` with O(1) insert/delete/contains/findany.

    With ``lazy=True`` nothing is zeroed at construction: every block and
    sub-block entry is trusted only after a back-reference handshake with
    its queue, so the backing memory may hold arbitrary garbage (pass a
    ``random.Random`` as ``garbage`` to simulate that).
    """

    backend = "python"

    def __init__(self, n, lazy=False, garbage=None):
        lay = FindAnyLayout(n)
        self.layout = lay
        self.n = n
        self.lazy = bool(lazy)
        if garbage is not None and not self.lazy:
            raise ValueError("garbage-filled memory requires lazy mode")
        self.S = _alloc(lay.s_words(), garbage)
        (self.number, self.bq, self.barr, self.sql, self.sq,
         self.sarr) = [_alloc(words_for(c * w), garbage)
                       for _, c, w in lay.aux_fields()]
        self.bq_len = 0
        self.size = 0
        self.probes = 0
        self._B = lay.block
        self._sb = lay.sub
        self._spb = lay.per_block
        self._num_w = lay.num_w
        self._bq_w = lay.bq_w
        self._sql_w = lay.sql_w
        self._sq_w = lay.sq_w

    # -- certification -------------------------------------------------

    def _block_slot(self, b):
        """Queue slot of block ``b`` or -1; two probes."""
        j = read_bits(self.barr, b * self._bq_w, self._bq_w)
        self.probes += 1
        if j < self.bq_len:
            self.probes += 1
            if read_bits(self.bq, j * self._bq_w, self._bq_w) == b:
                return j
        return -1

    def _sub_slot(self, b, g):
        """Position of sub-block ``g`` in block ``b``'s queue, or -1.

        Assumes block ``b`` is certified.
        """
        sqw = self._sq_w
        t = read_bits(self.sarr, (b * self._spb + g) * sqw, sqw)
        ln = read_bits(self.sql, b * self._sql_w, self._sql_w)
        self.probes += 2
        if t < ln:
            self.probes += 1
            if read_bits(self.sq, (b * self._spb + t) * sqw, sqw) == g:
                return t
        return -1

    # -- operations ----------------------------------------------------

    def _check(self, i):
        if not 0 <= i < self.n:
            raise IndexError(f"element {i} outside universe [0, {self.n})")

    def contains(self, i):
        self._check(i)
        if self.lazy:
            b, off = divmod(i, self._B)
            if self._block_slot(b) < 0 or self._sub_slot(b, off // self._sb) < 0:
                return False
        self.probes += 1
        return bool((self.S[i >> 6] >> (i & 63)) & 1)

    __contains__ = contains

    def insert(self, i):
        self._check(i)
        B, sb, spb = self._B, self._sb, self._spb
        b, off = divmod(i, B)
        g = off // sb
        if self._block_slot(b) < 0:
            j = self.bq_len
            write_bits(self.bq, j * self._bq_w, self._bq_w, b)
            write_bits(self.barr, b * self._bq_w, self._bq_w, j)
            write_bits(self.sql, b * self._sql_w, self._sql_w, 0)
            write_bits(self.number, b * self._num_w, self._num_w, 0)
            self.bq_len = j + 1
            self.probes += 4
        if self._sub_slot(b, g) < 0:
            # uncertified sub-block: its S bits may be garbage
            write_bits(self.S, b * B + g * sb, sb, 0)
            t = read_bits(self.sql, b * self._sql_w, self._sql_w)
            sqw = self._sq_w
            write_bits(self.sq, (b * spb + t) * sqw, sqw, g)
            write_bits(self.sarr, (b * spb + g) * sqw, sqw, t)
            write_bits(self.sql, b * self._sql_w, self._sql_w, t + 1)
            self.probes += 5
        q, r = i >> 6, i & 63
        w = self.S[q]
        self.probes += 1
        if not (w >> r) & 1:
            self.S[q] = w | (1 << r)
            c = read_bits(self.number, b * self._num_w, self._num_w)
            write_bits(self.number, b * self._num_w, self._num_w, c + 1)
            self.size += 1
            self.probes += 3

    add = insert

    def delete(self, i):
        self._check(i)
        B, sb, spb = self._B, self._sb, self._spb
        b, off = divmod(i, B)
        g = off // sb
        if self.lazy:
            j = self._block_slot(b)
            if j < 0 or self._sub_slot(b, g) < 0:
                return
        q, r = i >> 6, i & 63
        w = self.S[q]
        self.probes += 1
        if not (w >> r) & 1:
            return
        self.S[q] = w & ~(1 << r)
        self.size -= 1
        c = read_bits(self.number, b * self._num_w, self._num_w) - 1
        write_bits(self.number, b * self._num_w, self._num_w, c)
        self.probes += 3
        if read_bits(self.S, b * B + g * sb, sb) == 0:
            sqw = self._sq_w
            t = read_bits(self.sarr, (b * spb + g) * sqw, sqw)
            last = read_bits(self.sql, b * self._sql_w, self._sql_w) - 1
            lg_ = read_bits(self.sq, (b * spb + last) * sqw, sqw)
            write_bits(self.sq, (b * spb + t) * sqw, sqw, lg_)
            write_bits(self.sarr, (b * spb + lg_) * sqw, sqw, t)
            write_bits(self.sql, b * self._sql_w, self._sql_w, last)
            self.probes += 7
        if c == 0:
            bqw = self._bq_w
            j = read_bits(self.barr, b * bqw, bqw)
            last = self.bq_len - 1
            lb = read_bits(self.bq, last * bqw, bqw)
            write_bits(self.bq, j * bqw, bqw, lb)
            write_bits(self.barr, lb * bqw, bqw, j)
            self.bq_len = last
            self.probes += 4

    discard = delete

    def findany(self):
        if self.bq_len == 0:
            return None
        b = read_bits(self.bq, (self.bq_len - 1) * self._bq_w, self._bq_w)
        g = read_bits(self.sq, b * self._spb * self._sq_w, self._sq_w)
        base = b * self._B + g * self._sb
        word = read_bits(self.S, base, self._sb)
        self.probes += 3
        return base + first_set_after(word, 0)

    def enumerate(self):
        """Yield every member once, in no particular order."""
        B, sb, spb, sqw = self._B, self._sb, self._spb, self._sq_w
        for j in range(self.bq_len):
            b = read_bits(self.bq, j * self._bq_w, self._bq_w)
            ln = read_bits(self.sql, b * self._sql_w, self._sql_w)
            for t in range(ln):
                g = read_bits(self.sq, (b * spb + t) * sqw, sqw)
                base = b * B + g * sb
                word = read_bits(self.S, base, sb)
                p = first_set_after(word, 0)
                while p >= 0:
                    yield base + p
                    p = first_set_after(word, p + 1)

    def __iter__(self):
        return self.enumerate()

    def __len__(self):
        return self.size

    # -- accounting ----------------------------------------------------

    def buffers(self):
        return {"S": self.S, "number": self.number, "block_queue": self.bq,
                "block_array": self.barr, "sub_queue_len": self.sql,
                "sub_queue": self.sq, "sub_block_array": self.sarr}

    def bit_usage(self):
        """(principal, auxiliary) workspace bits, word padding included."""
        lay = self.layout
        return 64 * lay.s_words(), 64 * lay.aux_words()

    def words_allocated(self):
        return sum(len(a) for a in self.buffers().values())
