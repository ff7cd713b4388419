"""Read-only adjacency-array graphs and the text file format.

File format (UTF-8, one record per line, ``#`` comments anywhere)::

    graph <directed|undirected> <n> <m> [weighted]
    u v [w]        # exactly m edge lines, 1-based ids

Neighbour order inside each list is the order edges appear in the file.
Graph arrays are input: algorithms never charge them as workspace.
"""

import os
from dataclasses import dataclass, field

MAX_WEIGHT = (1 << 32) - 1


class GraphFormatError(ValueError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(eq=False)
class Graph:
    """Adjacency arrays (CSR). Vertices are ``0..n-1``.

    Undirected graphs store each edge in both endpoint lists. Directed
    graphs keep out-lists in ``off/adj`` and in-lists in ``in_off/in_adj``.
    """

    n: int
    directed: bool
    edges: list  # (u, v) or (u, v, w) in file order, 0-based
    weighted: bool = False
    off: list = field(default_factory=list)
    adj: list = field(default_factory=list)
    wts: list = None
    eid: list = None
    in_off: list = None
    in_adj: list = None
    in_eid: list = None
    cross: list = None
    in_cross: list = None

    @property
    def m(self):
        return len(self.edges)

    # -- accessors ---------------------------------------------------------

    def _check(self, v):
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} outside [0, {self.n})")

    def degree(self, v):
        """Out-degree for directed graphs."""
        self._check(v)
        return self.off[v + 1] - self.off[v]

    out_degree = degree

    def in_degree(self, v):
        self._check(v)
        if not self.directed:
            return self.degree(v)
        return self.in_off[v + 1] - self.in_off[v]

    def neighbor(self, v, k):
        """k-th entry (0-based) of v's (out-)list."""
        if not 0 <= k < self.degree(v):
            raise IndexError(f"entry {k} outside the list of vertex {v}")
        return self.adj[self.off[v] + k]

    def in_neighbor(self, v, k):
        if not self.directed:
            return self.neighbor(v, k)
        if not 0 <= k < self.in_degree(v):
            raise IndexError(f"entry {k} outside the in-list of vertex {v}")
        return self.in_adj[self.in_off[v] + k]

    def neighbors(self, v):
        self._check(v)
        return self.adj[self.off[v]:self.off[v + 1]]

    def in_neighbors(self, v):
        if not self.directed:
            return self.neighbors(v)
        self._check(v)
        return self.in_adj[self.in_off[v]:self.in_off[v + 1]]

    def weight(self, v, k):
        if self.wts is None:
            raise ValueError("graph is unweighted")
        if not 0 <= k < self.degree(v):
            raise IndexError(f"entry {k} outside the list of vertex {v}")
        return self.wts[self.off[v] + k]

    def degrees(self):
        off = self.off
        return [off[v + 1] - off[v] for v in range(self.n)]

    @property
    def has_cross_links(self):
        return self.cross is not None

    def structurally_equal(self, other):
        return (self.n == other.n and self.directed == other.directed
                and self.weighted == other.weighted and self.edges == other.edges
                and self.off == other.off and self.adj == other.adj
                and self.in_off == other.in_off and self.in_adj == other.in_adj)


def _csr(n, pairs):
    """Lists of (vertex, neighbour, edge id) triples -> off, adj, eid."""
    off = [0] * (n + 1)
    for u, _, _ in pairs:
        off[u + 1] += 1
    for v in range(n):
        off[v + 1] += off[v]
    fill = off[:-1]
    adj = [0] * off[n]
    eid = [0] * off[n]
    for u, v, e in pairs:
        p = fill[u]
        adj[p] = v
        eid[p] = e
        fill[u] = p + 1
    return off, adj, eid


def from_edges(n, edges, directed=False, weighted=None):
    """Build a graph from 0-based ``(u, v)`` or ``(u, v, w)`` tuples."""
    edges = [tuple(e) for e in edges]
    if weighted is None:
        weighted = bool(edges) and len(edges[0]) == 3
    g = Graph(n=n, directed=directed, edges=edges, weighted=weighted)
    if directed:
        g.off, g.adj, g.eid = _csr(n, [(u, v, i) for i, (u, v, *_) in enumerate(edges)])
        g.in_off, g.in_adj, g.in_eid = _csr(
            n, [(v, u, i) for i, (u, v, *_) in enumerate(edges)])
    else:
        pairs = []
        for i, (u, v, *_) in enumerate(edges):
            pairs.append((u, v, i))
            pairs.append((v, u, i))
        g.off, g.adj, g.eid = _csr(n, pairs)
    if weighted:
        g.wts = [edges[e][2] for e in g.eid]
    return g


def build_cross_links(g):
    """Attach twin-entry positions; returns ``g`` for chaining.

    Undirected: ``cross[p]`` is the position of the reverse entry.
    Directed: ``cross[p]`` maps an out-entry (u, v) to u's position in v's
    in-list, and ``in_cross`` maps back.
    """
    if g.cross is not None:
        return g
    m = g.m
    if g.directed:
        out_pos = [0] * m
        for p, e in enumerate(g.eid):
            out_pos[e] = p
        in_pos = [0] * m
        for p, e in enumerate(g.in_eid):
            in_pos[e] = p
        g.cross = [in_pos[e] for e in g.eid]
        g.in_cross = [out_pos[e] for e in g.in_eid]
    else:
        first = [-1] * m
        cross = [0] * len(g.adj)
        for p, e in enumerate(g.eid):
            q = first[e]
            if q < 0:
                first[e] = p
            else:
                cross[p] = q
                cross[q] = p
        g.cross = cross
    return g


# -- text format ---------------------------------------------------------------

def _int(tok, what, lineno):
    try:
        return int(tok)
    except ValueError:
        raise GraphFormatError(f"{what} {tok!r} is not an integer", lineno) from None


def parse(text):
    header = None
    edges = []
    seen = set()
    n = m = 0
    directed = weighted = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tok = line.split()
        if header is None:
            if tok[0] != "graph" or len(tok) not in (4, 5):
                raise GraphFormatError(
                    "expected 'graph <directed|undirected> <n> <m> [weighted]'", lineno)
            if tok[1] not in ("directed", "undirected"):
                raise GraphFormatError(f"unknown graph kind {tok[1]!r}", lineno)
            if len(tok) == 5 and tok[4] != "weighted":
                raise GraphFormatError(f"unexpected header token {tok[4]!r}", lineno)
            directed = tok[1] == "directed"
            n = _int(tok[2], "vertex count", lineno)
            m = _int(tok[3], "edge count", lineno)
            if n < 0 or m < 0:
                raise GraphFormatError("counts must be non-negative", lineno)
            weighted = len(tok) == 5
            header = lineno
            continue
        want = 3 if weighted else 2
        if len(tok) != want:
            raise GraphFormatError(f"expected {want} fields, found {len(tok)}", lineno)
        if len(edges) == m:
            raise GraphFormatError(f"more than the declared {m} edges", lineno)
        u = _int(tok[0], "vertex", lineno)
        v = _int(tok[1], "vertex", lineno)
        for x in (u, v):
            if not 1 <= x <= n:
                raise GraphFormatError(f"vertex {x} outside [1, {n}]", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        key = (u, v) if directed else (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {u} {v}", lineno)
        seen.add(key)
        if weighted:
            w = _int(tok[2], "weight", lineno)
            if not 0 <= w <= MAX_WEIGHT:
                raise GraphFormatError(f"weight {w} outside [0, 2^32)", lineno)
            edges.append((u - 1, v - 1, w))
        else:
            edges.append((u - 1, v - 1))
    if header is None:
        raise GraphFormatError("missing header line")
    if len(edges) != m:
        raise GraphFormatError(f"declared {m} edges, found {len(edges)}")
    return from_edges(n, edges, directed=directed, weighted=weighted)


def load(source):
    """Read a graph from a path, or from text when ``source`` holds a header."""
    if isinstance(source, os.PathLike) or (
            isinstance(source, str) and "\n" not in source
            and not source.lstrip().startswith("graph")):
        with open(source, encoding="utf-8") as fh:
            return parse(fh.read())
    return parse(source)


def serialize(g):
    kind = "directed" if g.directed else "undirected"
    lines = [f"graph {kind} {g.n} {g.m}" + (" weighted" if g.weighted else "")]
    for e in g.edges:
        lines.append(" ".join(str(x + 1) if i < 2 else str(x) for i, x in enumerate(e)))
    return "\n".join(lines) + "\n"
