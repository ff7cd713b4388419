"""Topological sort and degeneracy ordering on a decrement sequence.

Both peel vertices whose counter has reached zero. A findany set ``Z``
holds the peelable vertices, and a :class:`DecrementSeq` holds the
remaining counts.
"""

from dataclasses import dataclass, field

from .bits import BitStore
from .decseq import DecrementSeq
from .findany import FindAnySet
from .spacemeter import SpaceLedger

REGISTER_BITS = 64


@dataclass
class OrderResult:
    order: list
    ok: bool  # False: a cycle (toposort) or not d-degenerate
    stats: dict = field(default_factory=dict)
    ledger: SpaceLedger = None


def toposort(g, ledger=None):
    if not g.directed:
        raise ValueError("topological order needs a directed graph")
    n = g.n
    ledger = ledger if ledger is not None else SpaceLedger()
    counts = DecrementSeq([g.in_degree(v) for v in range(n)])
    ready = FindAnySet(max(1, n))
    ledger.track("indegree_counters", counts)
    ledger.track("ready", ready)
    ledger.register("registers", 0, 2 * REGISTER_BITS)  # output count, loop vertex
    ledger.set_bound("m + 3n", g.m + 3 * n)
    for v in range(n):
        if counts.is_zero(v):
            ready.insert(v)
    off, adj = g.off, g.adj
    order = []
    v = ready.findany()
    while v is not None:
        ready.delete(v)
        order.append(v)
        for p in range(off[v], off[v + 1]):
            u = adj[p]
            if counts.dec_if_nonzero(u) and counts.is_zero(u):
                ready.insert(u)
        v = ready.findany()
    stats = {"probes": counts.probes + ready.probes}
    return OrderResult(order, len(order) == n, stats, ledger)


def degeneracy_order(g, d, ledger=None):
    """Order where each vertex has at most ``d`` neighbours after it, if any."""
    if g.directed:
        raise ValueError("degeneracy is defined here for undirected graphs")
    if d < 0:
        raise ValueError("d must be non-negative")
    n = g.n
    ledger = ledger if ledger is not None else SpaceLedger()
    xs = [max(0, g.degree(v) - d) for v in range(n)]
    counts = DecrementSeq(xs)
    ready = FindAnySet(max(1, n))
    emitted = BitStore(n)
    ledger.track("excess_counters", counts)
    ledger.track("ready", ready)
    ledger.track("emitted", emitted)
    ledger.register("registers", 0, 2 * REGISTER_BITS)
    ledger.set_bound("X + 3n (X = sum of clipped degrees)", counts.m + 3 * n)
    for v in range(n):
        if xs[v] == 0:
            ready.insert(v)
    off, adj = g.off, g.adj
    order = []
    v = ready.findany()
    while v is not None:
        ready.delete(v)
        order.append(v)
        emitted[v] = 1
        for p in range(off[v], off[v + 1]):
            u = adj[p]
            if not emitted[u] and counts.dec_if_nonzero(u) and counts.is_zero(u):
                ready.insert(u)
        v = ready.findany()
    stats = {"probes": counts.probes + ready.probes}
    return OrderResult(order, len(order) == n, stats, ledger)
