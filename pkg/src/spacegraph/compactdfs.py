"""DFS and chain decomposition in O(n lg(m/n)) bits, without cross-links.

Each vertex v owns a field of ``max(1, ceil(lg d_v))`` bits, just wide
enough for an index into its adjacency list. The fields are located
with select on a marker string holding ``0^(w-1) 1`` per vertex. One
field array stores each vertex's DFS parent as a position in its own
list, and another stores the scan position at which a grey vertex
resumes.
"""

from .bits import BitStore, RankSelect
from .dfs import ChainReport, DfsResult, _check_connected_undirected, _cut_and_flags
from ._layout import ceil_lg
from .spacemeter import SpaceLedger

REGISTER_BITS = 64


def field_width(d):
    return max(1, ceil_lg(d)) if d > 1 else 1


class PositionFieldArray:
    """Per-vertex variable-width fields located by select on a marker string."""

    def __init__(self, widths=None, like=None):
        if like is not None:
            self.B, self.rs, self.n = like.B, like.rs, like.n
            self.shared = True
        else:
            widths = list(widths)
            self.n = len(widths)
            total = sum(widths)
            self.B = BitStore(total)
            pos = 0
            bw = self.B.words
            for w in widths:
                if w < 1:
                    raise ValueError("field widths must be >= 1")
                pos += w
                bw[(pos - 1) >> 6] |= 1 << ((pos - 1) & 63)
            self.rs = RankSelect(self.B)
            self.shared = False
        self.P = BitStore(self.B.length)

    @classmethod
    def for_degrees(cls, degrees):
        return cls([field_width(d) for d in degrees])

    def _span(self, v):
        if not 0 <= v < self.n:
            raise IndexError(f"field {v} outside [0, {self.n})")
        start = self.rs.select1(v) + 1 if v else 0
        return start, self.rs.select1(v + 1) - start + 1

    def width(self, v):
        return self._span(v)[1]

    def get(self, v):
        start, w = self._span(v)
        return self.P.read(start, w)

    def set(self, v, value):
        start, w = self._span(v)
        if not 0 <= value < (1 << w):
            raise ValueError(f"value {value} does not fit field {v} of {w} bits")
        self.P.write(start, w, value)

    __getitem__ = get
    __setitem__ = set

    def track(self, ledger, label):
        if not self.shared:
            ledger.track(f"{label}_B", self.B)
            ledger.track(f"{label}_B_select", self.rs)
        ledger.track(f"{label}_P", self.P)


class _Compact:
    def __init__(self, g):
        self.g = g
        n = g.n
        out_deg = g.degrees()
        self.resume = PositionFieldArray.for_degrees(out_deg)
        if g.directed:
            in_deg = [g.in_off[v + 1] - g.in_off[v] for v in range(n)]
            self.parent_pos = PositionFieldArray.for_degrees(in_deg)
            self.plist = (g.in_off, g.in_adj)
        else:
            self.parent_pos = PositionFieldArray(like=self.resume)
            self.plist = (g.off, g.adj)
        self.is_root = BitStore(n)
        self.touches = 0

    def parent(self, v):
        if self.is_root[v]:
            return -1
        off, adj = self.plist
        return adj[off[v] + self.parent_pos[v]]

    def link(self, u, v):
        """Record u as v's parent by finding u in v's (in-)list."""
        off, adj = self.plist
        for q in range(off[v], off[v + 1]):
            self.touches += 1
            if adj[q] == u:
                self.parent_pos[v] = q - off[v]
                return
        raise AssertionError("tree edge missing from the reverse list")

    def run(self, start, restart, color, on_discover=None, relink=True):
        g = self.g
        n = g.n
        off, adj = g.off, g.adj
        pre = []
        tree = []
        cursor = 0
        root = start
        while True:
            color[root] = 1
            self.is_root[root] = 1
            if relink:
                self.parent_pos[root] = 0
            pre.append(root)
            if on_discover:
                on_discover(root)
            u, k = root, 0
            while True:
                lo = off[u]
                deg = off[u + 1] - lo
                while k < deg:
                    self.touches += 1
                    if not color[adj[lo + k]]:
                        break
                    k += 1
                if k < deg:
                    v = adj[lo + k]
                    self.resume[u] = k
                    color[v] = 1
                    if relink:
                        self.link(u, v)
                    pre.append(v)
                    tree.append((u, v))
                    if on_discover:
                        on_discover(v)
                    u, k = v, 0
                    continue
                if u == root:
                    break
                u = self.parent(u)
                k = self.resume[u] + 1
            if not restart:
                break
            while cursor < n and color[cursor]:
                cursor += 1
            if cursor == n:
                break
            root = cursor
        return pre, tree


def _track_common(ledger, st, color):
    st.resume.track(ledger, "resume")
    st.parent_pos.track(ledger, "parent")
    ledger.track("is_root", st.is_root)
    ledger.track("colors", color)


def dfs_compact(g, start=0, restart=False, ledger=None):
    if not 0 <= start < g.n:
        raise IndexError(f"start vertex {start} outside [0, {g.n})")
    ledger = ledger if ledger is not None else SpaceLedger()
    st = _Compact(g)
    color = BitStore(g.n)
    _track_common(ledger, st, color)
    ledger.register("registers", 0, 4 * REGISTER_BITS)
    pre, tree = st.run(start, restart, color)
    return DfsResult(pre, tree, ledger=ledger,
                     stats={"touches": st.touches, "tree_edges": len(tree)})


def chains_compact(g, ledger=None):
    _check_connected_undirected(g)
    ledger = ledger if ledger is not None else SpaceLedger()
    n = g.n
    off, adj = g.off, g.adj
    st = _Compact(g)
    color = BitStore(n)
    _track_common(ledger, st, color)
    first, _ = st.run(0, False, color)

    color.clear()
    visited = BitStore(n)
    M = BitStore(n)  # M[v]: tree edge (parent(v), v) lies on some chain
    ledger.track("visited", visited)
    ledger.track("M", M)
    ledger.register("registers", 0, 6 * REGISTER_BITS)
    chains = []
    parent = st.parent

    def discover(v):
        pv = parent(v)
        for k in range(off[v + 1] - off[v]):
            x = adj[off[v] + k]
            if color[x] or x == pv or parent(x) == v:
                continue
            visited[v] = 1
            verts = [v, x]
            cur = x
            while not visited[cur]:
                visited[cur] = 1
                if M[cur]:
                    raise AssertionError("a tree edge was assigned to two chains")
                M[cur] = 1
                cur = parent(cur)
                verts.append(cur)
            chains.append(("cycle" if cur == v else "path", verts))

    second, _ = st.run(0, False, color, on_discover=discover, relink=False)
    if second != first:
        raise AssertionError("rerun discovered vertices in a different order")
    bridges = sorted((min(v, p), max(v, p)) for v in range(n)
                     if not M[v] and (p := parent(v)) >= 0)
    cut, two_edge, bicon = _cut_and_flags(g, chains, bridges)
    return ChainReport(chains, bridges, cut, two_edge, bicon, ledger,
                       {"touches": st.touches})
