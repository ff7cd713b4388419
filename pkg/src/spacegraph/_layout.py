"""Block/sub-block geometry shared by both findany backends."""


def ceil_div(a, b):
    return -(-a // b)


def ceil_lg(n):
    """ceil(log2 n) for n >= 1."""
    return (n - 1).bit_length()


def width_for(max_value):
    """Bits needed to store values in [0, max_value]."""
    return max(1, int(max_value).bit_length())


def words_for(nbits):
    return max(1, ceil_div(nbits, 64))


class FindAnyLayout:
    """Sizes of every array of a findany structure over ``n`` elements.

    ``lg`` defaults to ceil(lg n); the decrement sequence passes a global
    value so that many small structures share one geometry.
    """

    __slots__ = ("n", "lg", "sub", "block", "per_block", "nblocks", "nsub",
                 "num_w", "bq_w", "sql_w", "sq_w", "s_bits")

    def __init__(self, n, lg=None, max_sub=64):
        if n < 1:
            raise ValueError("universe size must be >= 1")
        self.n = n
        lg = max(2, ceil_lg(n) if lg is None else lg)
        self.lg = lg
        # lg-bit sub-blocks still fit one word, and with the power-of-two count
        # below the aux bits per element fall at every doubling of n
        self.sub = min(max_sub, max(8, lg))
        # sub-blocks per block: a power of two near lg^2 / sub, so the
        # sub-queue entry width is exact rather than rounded up
        self.per_block = 1 << max(0, ceil_div(lg * lg, self.sub).bit_length() - 1)
        self.block = self.per_block * self.sub
        self.nblocks = ceil_div(n, self.block)
        self.nsub = ceil_div(n, self.sub)
        self.num_w = width_for(self.block)
        self.bq_w = width_for(self.nblocks - 1)
        self.sql_w = width_for(self.per_block)
        self.sq_w = width_for(self.per_block - 1)
        self.s_bits = self.nsub * self.sub

    def aux_fields(self):
        """(name, count, width) of every auxiliary packed array."""
        return (
            ("number", self.nblocks, self.num_w),
            ("block_queue", self.nblocks, self.bq_w),
            ("block_array", self.nblocks, self.bq_w),
            ("sub_queue_len", self.nblocks, self.sql_w),
            ("sub_queue", self.nblocks * self.per_block, self.sq_w),
            ("sub_block_array", self.nsub, self.sq_w),
        )

    def s_words(self):
        return words_for(self.s_bits)

    def aux_words(self):
        return sum(words_for(c * w) for _, c, w in self.aux_fields())
