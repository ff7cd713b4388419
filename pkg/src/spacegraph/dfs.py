"""Depth-first search without a stack, and chain decomposition.

``O`` is the unary degree encoding (a 0 per vertex followed by a 1 per
adjacency entry). ``E`` has the same length and marks, for every tree
edge (t, w), the entry of w in t's list. To backtrack from a finished
vertex w we scan w's (in-)list. Cross-links lead to the twin entries,
and exactly one of them, the parent's, is marked in ``E``. The parent
resumes its scan right after that entry, so the whole search costs
O(m + n) time.
"""

from dataclasses import dataclass, field

from .bits import BitStore, PackedVec, RankSelect
from .spacemeter import SpaceLedger

WHITE, GREY, BLACK = 0, 1, 2
REGISTER_BITS = 64


@dataclass
class DfsResult:
    preorder: list
    tree_edges: list  # (parent, child) in discovery order
    O: BitStore = None
    E: BitStore = None
    ledger: SpaceLedger = None
    stats: dict = field(default_factory=dict)


@dataclass
class ChainReport:
    chains: list  # (kind, vertices) with kind "cycle" or "path"
    bridges: list
    cut_vertices: list
    two_edge_connected: bool
    biconnected: bool
    ledger: SpaceLedger = None
    stats: dict = field(default_factory=dict)

    @property
    def chain_count(self):
        return len(self.chains)

    def summary(self):
        """Everything except the ledger, for cross-implementation comparison."""
        return (self.chains, self.bridges, self.cut_vertices,
                self.two_edge_connected, self.biconnected)


def unary_encoding(g):
    """O as a BitStore: per vertex a 0 then one 1 per (out-)list entry."""
    n = g.n
    O = BitStore(n + len(g.adj))
    w = O.words
    off = g.off
    for v in range(n):
        for pos in range(off[v] + v + 1, off[v + 1] + v + 1):
            w[pos >> 6] |= 1 << (pos & 63)
    return O


class _Unary:
    """O with its select overlay, E, and the backtracking scan."""

    def __init__(self, g):
        self.g = g
        self.O = unary_encoding(g)
        self.rs = RankSelect(self.O)
        self.E = BitStore(self.O.length)
        self.touches = 0

    def base(self, v):
        """Position in O/E of v's first entry."""
        return self.rs.select0(v + 1) + 1

    def parent(self, w):
        """(t, k): w's tree parent and the index of w in t's list, or None."""
        g = self.g
        if g.directed:
            lo, hi, nbr, twin = g.in_off[w], g.in_off[w + 1], g.in_adj, g.in_cross
        else:
            lo, hi, nbr, twin = g.off[w], g.off[w + 1], g.adj, g.cross
        Ew = self.E.words
        for q in range(lo, hi):
            self.touches += 1
            t = nbr[q]
            k = twin[q] - g.off[t]
            pos = self.base(t) + k
            if (Ew[pos >> 6] >> (pos & 63)) & 1:
                return t, k
        return None


def _color_store(n, colors):
    if colors == 2:
        return BitStore(n)
    if colors == 3:
        return PackedVec(n, 3)
    raise ValueError("colors must be 2 or 3")


def _run(u_state, start, restart, colors, color, on_discover=None, mark=True):
    """The stackless DFS shared by the first pass and the chain rerun."""
    g = u_state.g
    n = g.n
    off, adj = g.off, g.adj
    E = u_state.E
    pre = []
    tree = []
    cursor = 0
    root = start
    while True:
        color[root] = GREY
        pre.append(root)
        if on_discover:
            on_discover(root)
        u, k = root, 0
        while True:
            lo = off[u]
            deg = off[u + 1] - lo
            while k < deg:
                u_state.touches += 1
                if color[adj[lo + k]] == WHITE:
                    break
                k += 1
            if k < deg:
                v = adj[lo + k]
                if mark:
                    E[u_state.base(u) + k] = 1
                color[v] = GREY
                pre.append(v)
                tree.append((u, v))
                if on_discover:
                    on_discover(v)
                u, k = v, 0
                continue
            if colors == 3:
                color[u] = BLACK
            if u == root:
                break
            u, k = u_state.parent(u)
            k += 1
        if not restart:
            break
        while cursor < n and color[cursor] != WHITE:
            cursor += 1
        if cursor == n:
            break
        root = cursor
    return pre, tree


def _require_cross(g):
    if g.cross is None:
        raise ValueError("this DFS needs cross-links; call graph.build_cross_links first")


def dfs_unary(g, start=0, restart=False, colors=2, ledger=None):
    _require_cross(g)
    if not 0 <= start < g.n:
        raise IndexError(f"start vertex {start} outside [0, {g.n})")
    ledger = ledger if ledger is not None else SpaceLedger()
    st = _Unary(g)
    color = _color_store(g.n, colors)
    ledger.track("O", st.O)
    ledger.track("O_select", st.rs)
    ledger.track("E", st.E)
    ledger.track("colors", color)
    ledger.register("registers", 0, 4 * REGISTER_BITS)  # u, k, root, cursor
    n, m = g.n, g.m
    if g.directed:
        ledger.set_bound("2m + (lg 3 + 2)n" if colors == 3 else "2m + 3n",
                         2 * m + (int(3.59 * n) if colors == 3 else 3 * n))
    else:
        ledger.set_bound("4m + (lg 3 + 2)n" if colors == 3 else "4m + 3n",
                         4 * m + (int(3.59 * n) if colors == 3 else 3 * n))
    pre, tree = _run(st, start, restart, colors, color)
    return DfsResult(pre, tree, st.O, st.E, ledger,
                     {"touches": st.touches, "tree_edges": st.E.count()})


def _cut_and_flags(g, chains, bridges):
    n = g.n
    cut = set()
    for idx, (kind, verts) in enumerate(chains):
        if idx and kind == "cycle":
            cut.add(verts[0])
    for a, b in bridges:
        for x in (a, b):
            if g.degree(x) >= 2:
                cut.add(x)
    two_edge = n >= 2 and not bridges
    min_deg = min((g.degree(v) for v in range(n)), default=0)
    cycles = sum(1 for kind, _ in chains if kind == "cycle")
    bicon = n >= 3 and min_deg >= 2 and cycles == 1 and chains[0][0] == "cycle"
    return sorted(cut), two_edge, bicon


def _check_connected_undirected(g):
    if g.directed:
        raise ValueError("chain decomposition needs an undirected graph")
    if g.n == 0:
        raise ValueError("chain decomposition needs a non-empty graph")
    from .bfs import components
    if max(components(g)) > 0:
        raise ValueError("chain decomposition needs a connected graph")


def chain_decomposition(g, ledger=None):
    _require_cross(g)
    _check_connected_undirected(g)
    ledger = ledger if ledger is not None else SpaceLedger()
    n = g.n
    off, adj, cross = g.off, g.adj, g.cross
    st = _Unary(g)
    color = BitStore(n)
    ledger.track("O", st.O)
    ledger.track("O_select", st.rs)
    ledger.track("E", st.E)
    ledger.track("colors", color)
    first, _ = _run(st, 0, False, 2, color)

    color.clear()
    visited = BitStore(n)
    M = BitStore(st.O.length)
    ledger.track("visited", visited)
    ledger.track("M", M)
    ledger.register("registers", 0, 6 * REGISTER_BITS)
    ledger.set_bound("6m + 5n", 6 * g.m + 5 * n)
    chains = []
    twice = []

    def both(v, k):
        """M/E positions of entry k of v's list and of its twin."""
        q = cross[off[v] + k]
        x = adj[off[v] + k]
        return st.base(v) + k, st.base(x) + q - off[x]

    def discover(v):
        for k in range(off[v + 1] - off[v]):
            x = adj[off[v] + k]
            p, q = both(v, k)
            if st.E[p] or st.E[q] or color[x] != WHITE:
                continue
            visited[v] = 1
            for pos in (p, q):
                if M[pos]:
                    twice.append(pos)
                M[pos] = 1
            verts = [v, x]
            cur = x
            while not visited[cur]:
                visited[cur] = 1
                t, kk = st.parent(cur)
                for pos in both(t, kk):
                    if M[pos]:
                        twice.append(pos)
                    M[pos] = 1
                cur = t
                verts.append(t)
            chains.append(("cycle" if cur == v else "path", verts))

    second, _ = _run(st, 0, False, 2, color, on_discover=discover, mark=False)
    if second != first:
        raise AssertionError("rerun discovered vertices in a different order")
    if twice:
        raise AssertionError("an edge was assigned to two chains")
    bridges = []
    for v in range(n):
        bv = st.base(v)
        for k in range(off[v + 1] - off[v]):
            if st.E[bv + k] and not M[bv + k]:
                x = adj[off[v] + k]
                bridges.append((min(v, x), max(v, x)))
    bridges.sort()
    cut, two_edge, bicon = _cut_and_flags(g, chains, bridges)
    return ChainReport(chains, bridges, cut, two_edge, bicon, ledger,
                       {"touches": st.touches})
