"""Prim's algorithm with a bounded candidate pool.

Workspace is an n-bit in-tree mask plus a pool of at most ``k`` frontier
candidates (vertex, key, attachment). Keys are ``weight * n + vertex`` so
ties break by vertex id.

The pool keeps a threshold ``T``: every frontier vertex whose best key is
below ``T`` is in the pool, and nothing outside it is below ``T``. So
the pool minimum is the global frontier minimum. Inserting into a full
pool evicts the pool maximum and lowers ``T`` to it. When the pool runs
dry while ``T`` is finite, a refill pass recomputes frontier keys vertex
by vertex and keeps the ``k`` smallest with a 2k-entry selection buffer.
"""

import math
from dataclasses import dataclass, field

from .bfs import capacity_for
from .bits import BitStore, IntVec
from .spacemeter import SpaceLedger

INF = None
REGISTER_BITS = 64


class _Heap:
    """Binary heap of pool slots; ``sign`` = 1 for min-heap, -1 for max-heap."""

    def __init__(self, cap, width, keys, sign):
        self.h = IntVec(cap, width)
        self.pos = IntVec(cap, width)
        self.n = 0
        self.keys = keys
        self.sign = sign

    def _less(self, a, b):
        ka, kb = self.keys[a], self.keys[b]
        return ka < kb if self.sign > 0 else ka > kb

    def _place(self, i, s):
        self.h[i] = s
        self.pos[s] = i

    def up(self, i):
        h = self.h
        s = h[i]
        while i:
            p = (i - 1) >> 1
            ps = h[p]
            if not self._less(s, ps):
                break
            self._place(i, ps)
            i = p
        self._place(i, s)

    def down(self, i):
        h = self.h
        s = h[i]
        while True:
            c = 2 * i + 1
            if c >= self.n:
                break
            cs = h[c]
            if c + 1 < self.n and self._less(h[c + 1], cs):
                c += 1
                cs = h[c]
            if not self._less(cs, s):
                break
            self._place(i, cs)
            i = c
        self._place(i, s)

    def push(self, s):
        self._place(self.n, s)
        self.n += 1
        self.up(self.n - 1)

    def top(self):
        return self.h[0]

    def remove_at(self, i):
        self.n -= 1
        if i == self.n:
            return
        s = self.h[self.n]
        self._place(i, s)
        self.up(i)
        self.down(self.pos[s])

    def fix(self, s):
        i = self.pos[s]
        self.up(i)
        self.down(self.pos[s])

    def relabel(self, old, new):
        """Slot ``old`` is now called ``new``."""
        i = self.pos[old]
        self._place(i, new)


class CandidatePool:
    """At most ``cap`` (vertex, key, parent) entries with min/max access."""

    def __init__(self, cap, n, key_bits):
        self.cap = cap
        vw = max(1, (n - 1).bit_length())
        sw = max(1, (cap - 1).bit_length())
        self.vert = IntVec(cap, vw)
        self.key = IntVec(cap, key_bits)
        self.par = IntVec(cap, vw)
        self.mins = _Heap(cap, sw, self.key, 1)
        self.maxs = _Heap(cap, sw, self.key, -1)
        tsize = 1
        while tsize < 2 * cap:
            tsize <<= 1
        self.tsize = tsize
        self.table = IntVec(tsize, max(1, cap.bit_length()))  # slot + 1, 0 = empty
        self.size = 0

    def parts(self):
        return (self.vert, self.key, self.par, self.mins.h, self.mins.pos,
                self.maxs.h, self.maxs.pos, self.table)

    # -- vertex index (linear probing) --------------------------------------

    def _home(self, v):
        return (v * 0x9E3779B1) & (self.tsize - 1)

    def find(self, v):
        t = self._home(v)
        table, vert = self.table, self.vert
        while True:
            e = table[t]
            if e == 0:
                return -1
            if vert[e - 1] == v:
                return e - 1
            t = (t + 1) & (self.tsize - 1)

    def _table_slot(self, v):
        t = self._home(v)
        while self.vert[self.table[t] - 1] != v:
            t = (t + 1) & (self.tsize - 1)
        return t

    def _unindex(self, v):
        mask = self.tsize - 1
        table, vert = self.table, self.vert
        t = self._table_slot(v)
        table[t] = 0
        j = t
        while True:
            j = (j + 1) & mask
            e = table[j]
            if e == 0:
                return
            h = self._home(vert[e - 1])
            # move e back into the hole unless its home lies in (t, j]
            if (j > t and (h <= t or h > j)) or (j < t and h <= t and h > j):
                table[t] = e
                table[j] = 0
                t = j

    def _index(self, v, s):
        t = self._home(v)
        while self.table[t]:
            t = (t + 1) & (self.tsize - 1)
        self.table[t] = s + 1

    # -- entries -------------------------------------------------------------

    def insert(self, v, key, parent):
        s = self.size
        self.vert[s] = v
        self.key[s] = key
        self.par[s] = parent
        self.size = s + 1
        self._index(v, s)
        self.mins.push(s)
        self.maxs.push(s)

    def decrease(self, s, key, parent):
        self.key[s] = key
        self.par[s] = parent
        self.mins.fix(s)
        self.maxs.fix(s)

    def _remove(self, s):
        entry = (self.vert[s], self.key[s], self.par[s])
        self._unindex(entry[0])
        self.mins.remove_at(self.mins.pos[s])
        self.maxs.remove_at(self.maxs.pos[s])
        last = self.size - 1
        if s != last:
            # keep slots dense: move the last slot into s
            v = self.vert[last]
            self.vert[s] = v
            self.key[s] = self.key[last]
            self.par[s] = self.par[last]
            self.mins.relabel(last, s)
            self.maxs.relabel(last, s)
            self.table[self._table_slot_of_slot(last)] = s + 1
        self.size = last
        return entry

    def _table_slot_of_slot(self, s):
        v = self.vert[s]
        t = self._home(v)
        while self.table[t] != s + 1:
            t = (t + 1) & (self.tsize - 1)
        return t

    def pop_min(self):
        return self._remove(self.mins.top())

    def pop_max(self):
        return self._remove(self.maxs.top())

    def max_key(self):
        return self.key[self.maxs.top()]

    def clear(self):
        while self.size:
            self.pop_max()


def _select_smallest(keys, verts, pars, count, k):
    """Reorder the first ``count`` buffer entries so the k smallest keys come first."""
    lo, hi = 0, count - 1
    target = k
    # iterative quickselect with middle pivot (deterministic)
    while lo < hi:
        pivot = keys[(lo + hi) >> 1]
        i, j = lo, hi
        while i <= j:
            while keys[i] < pivot:
                i += 1
            while keys[j] > pivot:
                j -= 1
            if i <= j:
                for arr in (keys, verts, pars):
                    arr[i], arr[j] = arr[j], arr[i]
                i += 1
                j -= 1
        if target <= j:
            hi = j
        elif target >= i:
            lo = i
        else:
            break


@dataclass
class MstResult:
    edges: list
    total: int
    stats: dict = field(default_factory=dict)
    ledger: SpaceLedger = None


def mst(g, rule="log2", capacity=None, ledger=None, check=False):
    """Minimum spanning forest as (parent, vertex, weight) triples in output order."""
    if g.directed:
        raise ValueError("minimum spanning trees need an undirected graph")
    if g.wts is None:
        raise ValueError("minimum spanning trees need a weighted graph")
    n = g.n
    if capacity is None:
        capacity = capacity_for(n, rule) if n else 1
    k = max(1, capacity)
    ledger = ledger if ledger is not None else SpaceLedger()
    key_bits = 32 + max(1, n.bit_length())
    in_tree = BitStore(n)
    pool = CandidatePool(k, n, key_bits)
    vw = max(1, (n - 1).bit_length())
    buf_k = IntVec(2 * k, key_bits)
    buf_v = IntVec(2 * k, vw)
    buf_p = IntVec(2 * k, vw)
    ledger.track("in_tree", in_tree)
    for name, part in zip(("pool_vertex", "pool_key", "pool_parent", "min_heap",
                           "min_pos", "max_heap", "max_pos", "vertex_index"),
                          pool.parts()):
        ledger.register(name, 0, part.bit_usage()[0], source=part)
    for name, part in (("refill_keys", buf_k), ("refill_vertex", buf_v),
                       ("refill_parent", buf_p)):
        ledger.register(name, 0, part.bit_usage()[0], source=part)
    # threshold, cursor, counters
    ledger.register("registers", 0, 4 * REGISTER_BITS)
    f = n / (k * math.log2(max(2, n))) if n else 1
    ledger.set_bound("n + n/f", n + math.ceil(n / max(f, 1e-9)))

    off, adj, wts = g.off, g.adj, g.wts
    out = []
    total = 0
    stats = {"capacity": k, "refills": 0, "evictions": 0, "max_pool": 0,
             "components": 0}
    threshold = INF

    def relax(u):
        nonlocal threshold
        for p in range(off[u], off[u + 1]):
            y = adj[p]
            if in_tree[y]:
                continue
            c = wts[p] * n + y
            s = pool.find(y)
            if s >= 0:
                if c < pool.key[s]:
                    pool.decrease(s, c, u)
                continue
            if threshold is not INF and c >= threshold:
                continue
            if pool.size < k:
                pool.insert(y, c, u)
            elif c > pool.max_key():
                threshold = c
            else:
                ev = pool.pop_max()
                stats["evictions"] += 1
                threshold = ev[1]
                pool.insert(y, c, u)
            if pool.size > stats["max_pool"]:
                stats["max_pool"] = pool.size
            if check and pool.size > k:
                raise AssertionError("candidate pool exceeded its capacity")

    def refill():
        nonlocal threshold
        stats["refills"] += 1
        threshold = INF
        cnt = 0
        for y in range(n):
            if in_tree[y]:
                continue
            best = -1
            bp = 0
            for p in range(off[y], off[y + 1]):
                x = adj[p]
                if in_tree[x]:
                    c = wts[p] * n + y
                    if best < 0 or c < best:
                        best, bp = c, x
            if best < 0 or (threshold is not INF and best >= threshold):
                continue
            buf_k[cnt] = best
            buf_v[cnt] = y
            buf_p[cnt] = bp
            cnt += 1
            if cnt == 2 * k:
                _select_smallest(buf_k, buf_v, buf_p, cnt, k)
                for j in range(k, cnt):
                    if threshold is INF or buf_k[j] < threshold:
                        threshold = buf_k[j]
                cnt = k
        if cnt > k:
            _select_smallest(buf_k, buf_v, buf_p, cnt, k)
            for j in range(k, cnt):
                if threshold is INF or buf_k[j] < threshold:
                    threshold = buf_k[j]
            cnt = k
        for j in range(cnt):
            if threshold is INF or buf_k[j] < threshold:
                pool.insert(buf_v[j], buf_k[j], buf_p[j])
        stats["max_pool"] = max(stats["max_pool"], pool.size)

    cursor = 0
    while True:
        while cursor < n and in_tree[cursor]:
            cursor += 1
        if cursor == n:
            break
        stats["components"] += 1
        in_tree[cursor] = 1
        threshold = INF
        relax(cursor)
        while True:
            if pool.size == 0:
                if threshold is INF:
                    break
                refill()
                if pool.size == 0:
                    break
            y, c, u = pool.pop_min()
            w = c // n
            in_tree[y] = 1
            out.append((u, y, w))
            total += w
            relax(y)
    return MstResult(out, total, stats, ledger)
