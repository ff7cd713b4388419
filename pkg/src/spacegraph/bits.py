"""Bit arrays, rank/select, and packed small-alphabet vectors.

Everything stores 64-bit words in ``array('Q')`` buffers, so the bit cost
of a structure is simply ``64 * words``. Positions are 0-based.
"""

from array import array

from ._backend import kernels as _k

WORD_BITS = 64

_read_bits = _k.read_bits
_write_bits = _k.write_bits
_select_in_word = _k.select_in_word


def _zeros(nwords):
    return array("Q", bytes(8 * max(1, nwords)))


def first_set_after(word, i):
    """Smallest position ``p >= i`` with bit ``p`` of ``word`` set, or None."""
    if not 0 <= i <= WORD_BITS:
        raise ValueError(f"bit offset {i} outside [0, {WORD_BITS}]")
    p = _k.first_set_after(word, i)
    return None if p < 0 else p


class BitStore:
    """Fixed-length bit array."""

    __slots__ = ("length", "words")

    def __init__(self, length):
        if length < 0:
            raise ValueError("length must be non-negative")
        self.length = length
        self.words = _zeros(-(-length // WORD_BITS))

    @classmethod
    def from_bits(cls, bits):
        bits = list(bits)
        store = cls(len(bits))
        w = store.words
        for i, b in enumerate(bits):
            if b:
                w[i >> 6] |= 1 << (i & 63)
        return store

    @classmethod
    def from_string(cls, text):
        """``"10110"`` -> bit 0 is the first character."""
        return cls.from_bits(ch == "1" for ch in text)

    def __len__(self):
        return self.length

    def _check(self, i):
        if not 0 <= i < self.length:
            raise IndexError(f"bit position {i} outside [0, {self.length})")

    def __getitem__(self, i):
        self._check(i)
        return (self.words[i >> 6] >> (i & 63)) & 1

    get = __getitem__

    def __setitem__(self, i, bit):
        self._check(i)
        if bit:
            self.words[i >> 6] |= 1 << (i & 63)
        else:
            self.words[i >> 6] &= ~(1 << (i & 63)) & 0xFFFFFFFFFFFFFFFF

    set = __setitem__

    def read(self, pos, width):
        """``width`` (<= 64) bits starting at ``pos`` as an integer."""
        return _read_bits(self.words, pos, width)

    def write(self, pos, width, value):
        _write_bits(self.words, pos, width, value)

    def count(self):
        return sum(w.bit_count() for w in self.words)

    def clear(self):
        for q in range(len(self.words)):
            self.words[q] = 0

    def __iter__(self):
        w = self.words
        for i in range(self.length):
            yield (w[i >> 6] >> (i & 63)) & 1

    def __eq__(self, other):
        return (isinstance(other, BitStore) and self.length == other.length
                and self.words == other.words)

    def __repr__(self):
        head = "".join(str(b) for _, b in zip(range(64), self))
        return f"BitStore({self.length}, {head!r}{'...' if self.length > 64 else ''})"

    def bit_usage(self):
        return WORD_BITS * len(self.words), 0

    def words_allocated(self):
        return len(self.words)


class IntVec:
    """``count`` unsigned integers of ``width`` bits each, packed back to back."""

    __slots__ = ("count", "width", "words")

    def __init__(self, count, width):
        if not 1 <= width <= WORD_BITS:
            raise ValueError("field width must be in [1, 64]")
        self.count = count
        self.width = width
        self.words = _zeros(-(-count * width // WORD_BITS))

    def __len__(self):
        return self.count

    def __getitem__(self, i):
        if not 0 <= i < self.count:
            raise IndexError(f"index {i} outside [0, {self.count})")
        return _read_bits(self.words, i * self.width, self.width)

    def __setitem__(self, i, value):
        if not 0 <= i < self.count:
            raise IndexError(f"index {i} outside [0, {self.count})")
        if not 0 <= value < (1 << self.width):
            raise ValueError(f"value {value} does not fit in {self.width} bits")
        _write_bits(self.words, i * self.width, self.width, value)

    def bit_usage(self):
        return WORD_BITS * len(self.words), 0

    def words_allocated(self):
        return len(self.words)


def symbols_per_word(c):
    """Largest t with c**t <= 2**64."""
    t = 0
    p = 1
    while p * c <= 1 << WORD_BITS:
        p *= c
        t += 1
    return t


class PackedVec:
    """Vector over alphabet ``range(c)``, ``t`` symbols per word in radix c.

    Each access reads (and for writes rewrites) exactly one word.
    """

    __slots__ = ("alphabet", "length", "per_word", "powers", "words")

    def __init__(self, length, alphabet, fill=0):
        if alphabet < 2:
            raise ValueError("alphabet size must be >= 2")
        if not 0 <= fill < alphabet:
            raise ValueError(f"fill symbol {fill} outside alphabet")
        self.alphabet = alphabet
        self.length = length
        t = symbols_per_word(alphabet)
        self.per_word = t
        self.powers = [alphabet ** r for r in range(t)]
        nwords = max(1, -(-length // t))
        word = sum(fill * p for p in self.powers) if fill else 0
        self.words = array("Q", [word]) * nwords

    def __len__(self):
        return self.length

    def __getitem__(self, i):
        if not 0 <= i < self.length:
            raise IndexError(f"index {i} outside [0, {self.length})")
        return _k.packed_get(self.words, i, self.alphabet, self.per_word, self.powers)

    def __setitem__(self, i, symbol):
        if not 0 <= i < self.length:
            raise IndexError(f"index {i} outside [0, {self.length})")
        if not 0 <= symbol < self.alphabet:
            raise ValueError(f"symbol {symbol} outside alphabet of size {self.alphabet}")
        _k.packed_set(self.words, i, self.alphabet, self.per_word, self.powers, symbol)

    read = __getitem__
    write = __setitem__

    def fill(self, symbol):
        word = sum(symbol * p for p in self.powers)
        for q in range(len(self.words)):
            self.words[q] = word

    def bit_usage(self):
        return WORD_BITS * len(self.words), 0

    def words_allocated(self):
        return len(self.words)


class RankSelect:
    """Static rank/select overlay on an immutable :class:`BitStore`.

    Two-level counts: a 64-bit cumulative count per 2**16-bit superblock
    and a 16-bit in-superblock count per 512-bit block; rank adds at most
    eight word popcounts. Select starts from a sampled superblock (every
    4096th occurrence), walks superblock counts, binary-searches block
    counts, then finishes inside one word.
    """

    SUPER_SHIFT = 16
    BLOCK_WORDS = 8
    BLOCK_SHIFT = 9
    SAMPLE = 4096

    def __init__(self, base):
        self.base = base
        n = base.length
        self.n = n
        words = base.words
        nblocks = len(words) // self.BLOCK_WORDS + 1
        per_super = 1 << (self.SUPER_SHIFT - self.BLOCK_SHIFT)
        nsuper = nblocks // per_super + 1
        self.supers = array("Q", bytes(8 * nsuper))
        self.blocks = IntVec(nblocks, 16)
        bp = _k.block_popcounts(words, self.BLOCK_WORDS)
        total = 0
        in_super = 0
        bw = self.blocks.words
        for b in range(nblocks):
            if b % per_super == 0:
                self.supers[b // per_super] = total
                in_super = 0
            _write_bits(bw, b * 16, 16, in_super)
            c = bp[b] if b < len(bp) else 0
            total += c
            in_super += c
        for s in range((nblocks - 1) // per_super + 1, nsuper):
            self.supers[s] = total
        self.ones = total
        self.zeros = n - total
        self._per_super = per_super
        self.samples1 = self._sample(1)
        self.samples0 = self._sample(0)
        self.probes = 0

    def _sample(self, symbol):
        """Superblock index holding occurrence 1, 1+SAMPLE, 1+2*SAMPLE, ..."""
        total = self.ones if symbol else self.zeros
        nsamp = -(-total // self.SAMPLE)
        nsuper = len(self.supers)
        out = IntVec(max(1, nsamp), max(1, (nsuper - 1).bit_length()))
        s = 0
        for j in range(nsamp):
            k = j * self.SAMPLE + 1
            while s + 1 < nsuper and self._before_super(s + 1, symbol) < k:
                s += 1
            out[j] = s
        return out

    def _before_super(self, s, symbol):
        c = self.supers[s]
        return c if symbol else (s << self.SUPER_SHIFT) - c

    def rank(self, symbol, i):
        """Occurrences of ``symbol`` in positions [0, i)."""
        if not 0 <= i <= self.n:
            raise IndexError(f"rank position {i} outside [0, {self.n}]")
        words = self.base.words
        q = i >> 6
        b = i >> self.BLOCK_SHIFT
        r = self.supers[b // self._per_super] + _read_bits(self.blocks.words, b * 16, 16)
        for w in range(b * self.BLOCK_WORDS, q):
            r += words[w].bit_count()
        if i & 63:
            r += (words[q] & ((1 << (i & 63)) - 1)).bit_count()
        return r if symbol else i - r

    def rank1(self, i):
        return self.rank(1, i)

    def rank0(self, i):
        return self.rank(0, i)

    def select(self, symbol, k):
        """0-based position of the k-th (1-based) occurrence of ``symbol``."""
        total = self.ones if symbol else self.zeros
        if not 1 <= k <= total:
            raise IndexError(f"select ordinal {k} outside [1, {total}]")
        samples = self.samples1 if symbol else self.samples0
        j = (k - 1) // self.SAMPLE
        sw = samples.width
        s = _read_bits(samples.words, j * sw, sw)
        if j + 1 < samples.count:
            hi = _read_bits(samples.words, (j + 1) * sw, sw)
        else:
            hi = len(self.supers) - 1
        probes = 2
        # last superblock in [s, hi] with fewer than k occurrences before it
        while s < hi:
            mid = (s + hi + 1) >> 1
            probes += 1
            if self._before_super(mid, symbol) < k:
                s = mid
            else:
                hi = mid - 1
        k -= self._before_super(s, symbol)
        # last block in superblock s whose in-super count is < k
        per = self._per_super
        lo = s * per
        hi = min(lo + per, self.blocks.count) - 1
        bw = self.blocks.words
        while lo < hi:
            mid = (lo + hi + 1) >> 1
            c = _read_bits(bw, mid * 16, 16)
            if not symbol:
                c = ((mid - s * per) << self.BLOCK_SHIFT) - c
            probes += 1
            if c < k:
                lo = mid
            else:
                hi = mid - 1
        c = _read_bits(bw, lo * 16, 16)
        if not symbol:
            c = ((lo - s * per) << self.BLOCK_SHIFT) - c
        k -= c
        words = self.base.words
        q = lo * self.BLOCK_WORDS
        while True:
            w = words[q]
            if not symbol:
                w ^= 0xFFFFFFFFFFFFFFFF
            c = w.bit_count()
            probes += 1
            if c >= k:
                self.probes += probes
                return (q << 6) + _select_in_word(w, k)
            k -= c
            q += 1

    def select1(self, k):
        return self.select(1, k)

    def select0(self, k):
        return self.select(0, k)

    def bit_usage(self):
        """Auxiliary bits only; the base store is accounted separately."""
        aux = WORD_BITS * (len(self.supers) + len(self.blocks.words)
                           + len(self.samples1.words) + len(self.samples0.words))
        return 0, aux

    def words_allocated(self):
        return (len(self.supers) + len(self.blocks.words)
                + len(self.samples1.words) + len(self.samples0.words))


class EliasFano:
    """Static non-decreasing sequence over ``[0, universe]``.

    Each value is split into ``l = floor(lg(universe / count))`` low bits,
    stored verbatim, and a high part stored in unary: value ``i`` sets bit
    ``(v_i >> l) + i`` of ``high``. Reading value ``i`` is one select.
    Space is about ``count * (2 + l)`` bits plus the select overlay.
    """

    def __init__(self, values, universe):
        values = list(values)
        n = len(values)
        self.count = n
        self.universe = universe
        self.low_bits = l = (universe // n).bit_length() - 1 if n and universe >= n else 0
        self.low = BitStore(n * l)
        self.high = BitStore(n + (universe >> l) + 1)
        hw = self.high.words
        prev = 0
        for i, v in enumerate(values):
            if v < prev or v > universe:
                raise ValueError("values must be non-decreasing and within the universe")
            prev = v
            if l:
                self.low.write(i * l, l, v & ((1 << l) - 1))
            p = (v >> l) + i
            hw[p >> 6] |= 1 << (p & 63)
        self.rs = RankSelect(self.high)

    def __len__(self):
        return self.count

    @property
    def probes(self):
        return self.rs.probes

    def high_position(self, i):
        """Position in ``high`` of value i's unary marker."""
        return self.rs.select1(i + 1)

    def value_at(self, i, p):
        """Value i given its marker position ``p`` in ``high``."""
        l = self.low_bits
        return ((p - i) << l) | (self.low.read(i * l, l) if l else 0)

    def __getitem__(self, i):
        if not 0 <= i < self.count:
            raise IndexError(f"index {i} outside [0, {self.count})")
        return self.value_at(i, self.high_position(i))

    def bit_usage(self):
        return 0, self.low.bit_usage()[0] + self.high.bit_usage()[0] + self.rs.bit_usage()[1]

    def words_allocated(self):
        return (self.low.words_allocated() + self.high.words_allocated()
                + self.rs.words_allocated())
