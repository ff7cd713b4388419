"""Pure-Python word kernels.

Mirrors the compiled ``_ckernels`` extension function for function. All
word buffers are ``array('Q')`` objects holding 64-bit words, bit ``p`` of
the logical string living in word ``p >> 6`` at offset ``p & 63``.
"""

from array import array

WORD_BITS = 64
WORD_MASK = (1 << 64) - 1


def popcount(x):
    return x.bit_count()


def first_set_after(word, i):
    """Smallest set bit position ``>= i`` in ``word``, or -1."""
    if i >= WORD_BITS:
        return -1
    x = (word >> i) << i
    if not x:
        return -1
    return (x & -x).bit_length() - 1


def select_in_word(word, k):
    """Position of the k-th (1-based) set bit of ``word``; -1 if absent."""
    if k <= 0:
        return -1
    # byte-wise skip, then bit loop within one byte
    shift = 0
    while shift < WORD_BITS:
        c = ((word >> shift) & 0xFF).bit_count()
        if c >= k:
            b = (word >> shift) & 0xFF
            while True:
                low = b & -b
                k -= 1
                if k == 0:
                    return shift + low.bit_length() - 1
                b ^= low
        k -= c
        shift += 8
    return -1


def read_bits(words, pos, width):
    q = pos >> 6
    r = pos & 63
    x = words[q] >> r
    if r + width > 64:
        x |= words[q + 1] << (64 - r)
    return x & ((1 << width) - 1)


def write_bits(words, pos, width, value):
    q = pos >> 6
    r = pos & 63
    mask = (1 << width) - 1
    words[q] = (words[q] & ~(mask << r) & WORD_MASK) | ((value << r) & WORD_MASK)
    if r + width > 64:
        spill = 64 - r
        hi_mask = mask >> spill
        words[q + 1] = (words[q + 1] & ~hi_mask & WORD_MASK) | (value >> spill)


def block_popcounts(words, words_per_block):
    """Popcount of every run of ``words_per_block`` consecutive words."""
    nw = len(words)
    nb = (nw + words_per_block - 1) // words_per_block
    out = array("Q", bytes(8 * nb))
    for b in range(nb):
        s = 0
        for w in words[b * words_per_block:(b + 1) * words_per_block]:
            s += w.bit_count()
        out[b] = s
    return out


def packed_get(words, i, c, t, powers):
    q, r = divmod(i, t)
    return (words[q] // powers[r]) % c


def packed_set(words, i, c, t, powers, value):
    q, r = divmod(i, t)
    w = words[q]
    p = powers[r]
    old = (w // p) % c
    words[q] = w + (value - old) * p
