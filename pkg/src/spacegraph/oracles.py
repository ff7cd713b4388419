"""Plain reference implementations used by the tests and ``--verify``.

Nothing here is space-efficient; each routine is the obvious textbook
version so that it can referee the compact algorithms.
"""

from collections import deque


def bfs_levels(g, start, restart=False):
    """Queue BFS over out-lists. Returns (levels, component ids); -1 = unreached."""
    n = g.n
    level = [-1] * n
    comp = [-1] * n
    roots = [start] + (list(range(n)) if restart else [])
    c = 0
    for r in roots:
        if level[r] >= 0:
            continue
        level[r] = 0
        comp[r] = c
        q = deque([r])
        while q:
            u = q.popleft()
            for v in g.neighbors(u):
                if level[v] < 0:
                    level[v] = level[u] + 1
                    comp[v] = c
                    q.append(v)
        c += 1
    return level, comp


def level_valid(g, order, level, roots):
    """The level function is a BFS layering of the visited set."""
    seen = set(order)
    if len(seen) != len(order):
        return False
    for r in roots:
        if level[r] != 0:
            return False
    for v in order:
        if v in roots:
            continue
        preds = g.in_neighbors(v) if g.directed else g.neighbors(v)
        if not any(level[u] == level[v] - 1 and u in seen for u in preds):
            return False
    if not g.directed:
        for v in order:
            for u in g.neighbors(v):
                if u in seen and abs(level[u] - level[v]) > 1:
                    return False
    return True


def dfs(g, start, restart=False):
    """Stack DFS with the first-white-neighbour rule.

    Returns (preorder, tree edges as (parent, child) pairs).
    """
    n = g.n
    seen = [False] * n
    pre = []
    tree = []
    roots = [start] + (list(range(n)) if restart else [])
    for r in roots:
        if seen[r]:
            continue
        seen[r] = True
        pre.append(r)
        stack = [(r, 0)]
        while stack:
            u, k = stack[-1]
            nbrs = g.neighbors(u)
            while k < len(nbrs) and seen[nbrs[k]]:
                k += 1
            if k == len(nbrs):
                stack.pop()
                continue
            v = nbrs[k]
            stack[-1] = (u, k + 1)
            seen[v] = True
            pre.append(v)
            tree.append((u, v))
            stack.append((v, 0))
    return pre, tree


class _DSU:
    def __init__(self, n):
        self.p = list(range(n))

    def find(self, x):
        p = self.p
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        a, b = self.find(a), self.find(b)
        if a == b:
            return False
        self.p[a] = b
        return True


def kruskal(g):
    """(total weight, edge count) of a minimum spanning forest."""
    d = _DSU(g.n)
    total = count = 0
    for u, v, w in sorted(g.edges, key=lambda e: e[2]):
        if d.union(u, v):
            total += w
            count += 1
    return total, count


def is_spanning_forest(g, edges):
    """Acyclic and connects exactly what the graph connects."""
    d = _DSU(g.n)
    for u, v, *_ in edges:
        if d.union(u, v) is False:
            return False
    return len(edges) == g.n - count_components(g)


def count_components(g, skip_vertex=None, skip_edge=None):
    n = g.n
    d = _DSU(n)
    for i, (u, v, *_) in enumerate(g.edges):
        if i == skip_edge or skip_vertex in (u, v):
            continue
        d.union(u, v)
    roots = {d.find(v) for v in range(n) if v != skip_vertex}
    return len(roots)


def components(g):
    d = _DSU(g.n)
    for u, v, *_ in g.edges:
        d.union(u, v)
    ids = {}
    return [ids.setdefault(d.find(v), len(ids)) for v in range(g.n)]


def bridges(g):
    """Edges whose removal disconnects something, as sorted (min, max) pairs."""
    base = count_components(g)
    out = []
    for i, (u, v, *_) in enumerate(g.edges):
        if count_components(g, skip_edge=i) > base:
            out.append((min(u, v), max(u, v)))
    return sorted(out)


def cut_vertices(g):
    base = count_components(g)
    return [v for v in range(g.n)
            if g.degree(v) > 0 and count_components(g, skip_vertex=v) > base]


def connectivity_report(g):
    """(bridges, cut vertices, 2-edge-connected, biconnected) by brute force."""
    br = bridges(g)
    cv = cut_vertices(g)
    connected = count_components(g) == 1
    two_edge = connected and g.n >= 2 and not br
    bicon = connected and g.n >= 3 and not cv
    return br, cv, two_edge, bicon


def bipartite(g):
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for v in g.neighbors(u):
                if color[v] < 0:
                    color[v] = color[u] ^ 1
                    q.append(v)
                elif color[v] == color[u]:
                    return False
    return True


def has_cycle(g):
    """Directed cycle detection by three-colour DFS."""
    color = [0] * g.n
    for s in range(g.n):
        if color[s]:
            continue
        color[s] = 1
        stack = [(s, 0)]
        while stack:
            u, k = stack[-1]
            nbrs = g.neighbors(u)
            if k == len(nbrs):
                color[u] = 2
                stack.pop()
                continue
            stack[-1] = (u, k + 1)
            v = nbrs[k]
            if color[v] == 1:
                return True
            if color[v] == 0:
                color[v] = 1
                stack.append((v, 0))
    return False


def topo_valid(g, order):
    if sorted(order) != list(range(g.n)):
        return False
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    return all(pos[u] < pos[v] for u, v, *_ in g.edges)


def degeneracy(g):
    """Smallest d for which g is d-degenerate (bucketed min-degree peeling)."""
    n = g.n
    deg = g.degrees()
    maxd = max(deg, default=0)
    buckets = [set() for _ in range(maxd + 1)]
    for v in range(n):
        buckets[deg[v]].add(v)
    gone = [False] * n
    best = 0
    d = 0
    for _ in range(n):
        d = max(0, d - 1)
        while not buckets[d]:
            d += 1
        v = buckets[d].pop()
        best = max(best, d)
        gone[v] = True
        for u in g.neighbors(v):
            if not gone[u]:
                buckets[deg[u]].discard(u)
                deg[u] -= 1
                buckets[deg[u]].add(u)
    return best


def degeneracy_valid(g, order, d):
    """Each vertex has at most d neighbours not yet emitted when it is emitted."""
    if sorted(order) != list(range(g.n)):
        return False
    emitted = [False] * g.n
    for v in order:
        if sum(1 for u in g.neighbors(v) if not emitted[u]) > d:
            return False
        emitted[v] = True
    return True
