"""Breadth-first search in small workspace.

* ``bfs_two_queue``: 2-bit colours (white, grey0, grey1, black) with findany
  indexes on the two grey classes; O(m + n) time.
* ``bfs_scan``: a ternary colour per vertex and repeated full scans;
  O(mn) time in about n lg 3 bits.
* ``bfs_overflow``: the ternary colours plus two bounded frontier queues;
  a level whose queue overflowed is expanded by a scan instead.

Levels, component ids and the visit order are output and are not charged
to the workspace ledger.
"""

import math
from dataclasses import dataclass, field

from .bits import IntVec, PackedVec
from .findany import FindAnyPartition
from .spacemeter import SpaceLedger

WHITE, GREY0, GREY1, BLACK = 0, 1, 2, 3
UNEXPLORED = 0
REGISTER_BITS = 64


@dataclass
class BfsOutcome:
    order: list
    level: list
    component: list = None
    stats: dict = field(default_factory=dict)
    ledger: SpaceLedger = None
    odd_edge: tuple = None


def _check_start(g, start):
    if not 0 <= start < g.n:
        raise IndexError(f"start vertex {start} outside [0, {g.n})")


def _lg(n):
    return max(1.0, math.log2(max(2, n)))


def capacity_for(n, rule="log2"):
    """Queue capacity max(1, n / (f lg n)) for a rule ``const:k``, ``log2`` or ``loglog``."""
    lg = _lg(n)
    if rule == "log2":
        f = lg
    elif rule == "loglog":
        f = max(1.0, math.log2(lg))
    elif isinstance(rule, str) and rule.startswith("const:"):
        try:
            f = float(rule[6:])
        except ValueError:
            raise ValueError(f"bad capacity rule {rule!r}") from None
        if f <= 0:
            raise ValueError("const:k needs k > 0")
    else:
        raise ValueError(f"unknown capacity rule {rule!r}")
    return max(1, int(n / (f * lg)))


# -- variant A ------------------------------------------------------------------

def bfs_two_queue(g, start=0, restart=False, ledger=None):
    _check_start(g, start)
    n = g.n
    ledger = ledger if ledger is not None else SpaceLedger()
    colors = FindAnyPartition(n, 4, initial=WHITE, tracked=(GREY0, GREY1))
    ledger.track("colors", colors)
    # level, current grey class, component id, restart cursor
    ledger.register("registers", 0, 4 * REGISTER_BITS)
    ledger.set_bound("2n", 2 * n)
    order = []
    level = [-1] * n
    comp = [-1] * n
    touches = 0
    odd = None
    off, adj = g.off, g.adj
    move, class_of, findany_in = colors.move, colors.class_of, colors.findany_in
    cid = 0
    cursor = 0
    root = start
    while True:
        move(root, GREY0)
        order.append(root)
        level[root] = 0
        comp[root] = cid
        lev = 0
        cur = GREY0
        while True:
            nxt = GREY1 if cur == GREY0 else GREY0
            u = findany_in(cur)
            while u is not None:
                for p in range(off[u], off[u + 1]):
                    v = adj[p]
                    touches += 1
                    c = class_of(v)
                    if c == WHITE:
                        move(v, nxt)
                        order.append(v)
                        level[v] = lev + 1
                        comp[v] = cid
                    elif c == cur and odd is None and not g.directed:
                        odd = (u, v)
                move(u, BLACK)
                u = findany_in(cur)
            if colors.is_empty(nxt):
                break
            cur = nxt
            lev += 1
        if not restart:
            break
        while cursor < n and class_of(cursor) != WHITE:
            cursor += 1
        if cursor == n:
            break
        root = cursor
        cid += 1
    stats = {"touches": touches, "components": cid + 1, "probes": colors.probes}
    return BfsOutcome(order, level, comp if restart else None, stats, ledger, odd)


# -- variant B ------------------------------------------------------------------

def _parity(i):
    return 1 + (i & 1)


def bfs_scan(g, start=0, restart=False, ledger=None):
    _check_start(g, start)
    n = g.n
    ledger = ledger if ledger is not None else SpaceLedger()
    color = PackedVec(n, 3)
    ledger.track("colors", color)
    # scan index, idle-scan count, vertex cursor, restart cursor
    ledger.register("registers", 0, 4 * REGISTER_BITS)
    ledger.set_bound("n lg 3", math.ceil(n * math.log2(3)))
    order = []
    level = [-1] * n
    comp = [-1] * n
    off, adj = g.off, g.adj
    get, put = color.read, color.write
    scans = 0
    cid = 0
    cursor = 0
    root = start
    while True:
        put(root, _parity(0))
        order.append(root)
        level[root] = 0
        comp[root] = cid
        i = 0
        idle = 0
        while idle < 2:
            here, there = _parity(i), _parity(i + 1)
            productive = False
            for u in range(n):
                if get(u) != here:
                    continue
                for p in range(off[u], off[u + 1]):
                    v = adj[p]
                    if get(v) == UNEXPLORED:
                        put(v, there)
                        order.append(v)
                        level[v] = i + 1
                        comp[v] = cid
                        productive = True
            scans += 1
            idle = 0 if productive else idle + 1
            i += 1
        if not restart:
            break
        while cursor < n and get(cursor) != UNEXPLORED:
            cursor += 1
        if cursor == n:
            break
        root = cursor
        cid += 1
    stats = {"scans": scans, "components": cid + 1}
    return BfsOutcome(order, level, comp if restart else None, stats, ledger)


# -- variant C ------------------------------------------------------------------

def bfs_overflow(g, start=0, capacity=None, restart=False, ledger=None):
    _check_start(g, start)
    n = g.n
    if capacity is None:
        capacity = capacity_for(n)
    if capacity < 1:
        raise ValueError("capacity must be >= 1")
    ledger = ledger if ledger is not None else SpaceLedger()
    color = PackedVec(n, 3)
    width = max(1, (n - 1).bit_length())
    queues = (IntVec(capacity, width), IntVec(capacity, width))
    ledger.track("colors", color)
    ledger.track("queue0", queues[0])
    ledger.track("queue1", queues[1])
    # two lengths, two overflow bits, level, cursors
    ledger.register("registers", 0, 5 * REGISTER_BITS + 2)
    ledger.set_bound("n lg 3 + 2k lg n",
                     math.ceil(n * math.log2(3)) + 2 * capacity * width)
    order = []
    level = [-1] * n
    comp = [-1] * n
    off, adj = g.off, g.adj
    get, put = color.read, color.write
    fallback = 0
    scans = 0
    cid = 0
    cursor = 0
    root = start
    while True:
        put(root, _parity(0))
        order.append(root)
        level[root] = 0
        comp[root] = cid
        qlen = [1, 0]
        over = [False, False]
        queues[0][0] = root
        lev = 0
        while True:
            a, b = lev & 1, (lev + 1) & 1
            here, there = _parity(lev), _parity(lev + 1)
            qb = queues[b]
            grown = 0
            if over[a]:
                frontier = (u for u in range(n) if get(u) == here)
                fallback += 1
                scans += 1
            else:
                qa = queues[a]
                frontier = (qa[j] for j in range(qlen[a]))
            for u in frontier:
                for p in range(off[u], off[u + 1]):
                    v = adj[p]
                    if get(v) == UNEXPLORED:
                        put(v, there)
                        order.append(v)
                        level[v] = lev + 1
                        comp[v] = cid
                        grown += 1
                        if qlen[b] < capacity:
                            qb[qlen[b]] = v
                            qlen[b] += 1
                        else:
                            over[b] = True
            qlen[a] = 0
            over[a] = False
            if not grown:
                break
            lev += 1
        if not restart:
            break
        while cursor < n and get(cursor) != UNEXPLORED:
            cursor += 1
        if cursor == n:
            break
        root = cursor
        cid += 1
    stats = {"fallback_levels": fallback, "scans": scans, "capacity": capacity,
             "components": cid + 1}
    return BfsOutcome(order, level, comp if restart else None, stats, ledger)


# -- applications ---------------------------------------------------------------

def components(g):
    """Component id per vertex (ids in order of discovery from vertex 0)."""
    if g.n == 0:
        return []
    return bfs_two_queue(g, 0, restart=True).component


@dataclass
class BipartiteResult:
    bipartite: bool
    witness: tuple = None  # ((u, level u), (v, level v)) joined by an edge

    def __bool__(self):
        return self.bipartite


def is_bipartite(g):
    if g.directed:
        raise ValueError("bipartiteness is defined here for undirected graphs")
    if g.n == 0:
        return BipartiteResult(True)
    out = bfs_two_queue(g, 0, restart=True)
    if out.odd_edge is None:
        return BipartiteResult(True)
    u, v = out.odd_edge
    return BipartiteResult(False, ((u, out.level[u]), (v, out.level[v])))


VARIANTS = {"two-queue": bfs_two_queue, "scan": bfs_scan, "overflow": bfs_overflow}
