"""Deterministic graph families and random graphs (seeded ``random.Random``)."""

import random

from .graph import MAX_WEIGHT, from_edges

FAMILIES = ("path", "cycle", "star", "grid", "gnp", "dag")


def _weigh(edges, rng, weighted):
    if not weighted:
        return edges
    return [(u, v, rng.randint(0, MAX_WEIGHT)) for u, v in edges]


def path(n, weighted=False, seed=0):
    rng = random.Random(seed)
    return from_edges(n, _weigh([(i, i + 1) for i in range(n - 1)], rng, weighted))


def cycle(n, weighted=False, seed=0):
    rng = random.Random(seed)
    edges = [(i, i + 1) for i in range(n - 1)]
    if n >= 3:
        edges.append((n - 1, 0))
    return from_edges(n, _weigh(edges, rng, weighted))


def star(n, weighted=False, seed=0):
    rng = random.Random(seed)
    return from_edges(n, _weigh([(0, i) for i in range(1, n)], rng, weighted))


def grid(n, weighted=False, seed=0):
    """Near-square grid on n vertices, filled row by row."""
    rng = random.Random(seed)
    cols = max(1, int(n ** 0.5))
    edges = []
    for v in range(n):
        if (v + 1) % cols and v + 1 < n:
            edges.append((v, v + 1))
        if v + cols < n:
            edges.append((v, v + cols))
    return from_edges(n, _weigh(edges, rng, weighted))


def gnp(n, p, directed=False, weighted=False, seed=0):
    """Erdős–Rényi G(n, p); edge order is shuffled so lists are not sorted."""
    rng = random.Random(seed)
    edges = []
    if directed:
        for u in range(n):
            for v in range(n):
                if u != v and rng.random() < p:
                    edges.append((u, v))
    else:
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < p:
                    edges.append((u, v) if rng.random() < 0.5 else (v, u))
    rng.shuffle(edges)
    return from_edges(n, _weigh(edges, rng, weighted), directed=directed,
                      weighted=weighted)


def gnm(n, m, directed=False, weighted=False, seed=0):
    """Uniform simple graph with exactly min(m, max possible) edges."""
    rng = random.Random(seed)
    cap = n * (n - 1) if directed else n * (n - 1) // 2
    m = min(m, cap)
    seen = set()
    edges = []
    while len(edges) < m:
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v:
            continue
        key = (u, v) if directed else (min(u, v), max(u, v))
        if key in seen:
            continue
        seen.add(key)
        edges.append((u, v))
    return from_edges(n, _weigh(edges, rng, weighted), directed=directed,
                      weighted=weighted)


def connected(n, extra, weighted=False, seed=0):
    """Random spanning tree plus ``extra`` further random edges, shuffled."""
    rng = random.Random(seed)
    perm = list(range(n))
    rng.shuffle(perm)
    seen = set()
    edges = []
    for i in range(1, n):
        u, v = perm[i], perm[rng.randrange(i)]
        seen.add((min(u, v), max(u, v)))
        edges.append((u, v))
    cap = n * (n - 1) // 2
    target = min(cap, len(edges) + extra)
    while len(edges) < target:
        u, v = rng.randrange(n), rng.randrange(n)
        if u == v or (min(u, v), max(u, v)) in seen:
            continue
        seen.add((min(u, v), max(u, v)))
        edges.append((u, v))
    rng.shuffle(edges)
    return from_edges(n, _weigh(edges, rng, weighted), weighted=weighted)


def dag(n, p, weighted=False, seed=0):
    """Random DAG: edges go forward in a hidden random vertex order."""
    rng = random.Random(seed)
    rank = list(range(n))
    rng.shuffle(rank)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                edges.append((rank[i], rank[j]))
    rng.shuffle(edges)
    return from_edges(n, _weigh(edges, rng, weighted), directed=True,
                      weighted=weighted)


def family(name, n, seed=0, weighted=False, p=None):
    if name == "path":
        return path(n, weighted, seed)
    if name == "cycle":
        return cycle(n, weighted, seed)
    if name == "star":
        return star(n, weighted, seed)
    if name == "grid":
        return grid(n, weighted, seed)
    if name == "gnp":
        return gnp(n, p if p is not None else min(1.0, 4.0 / max(1, n)),
                   weighted=weighted, seed=seed)
    if name == "dag":
        return dag(n, p if p is not None else min(1.0, 4.0 / max(1, n)),
                   weighted=weighted, seed=seed)
    raise ValueError(f"unknown family {name!r}; expected one of {', '.join(FAMILIES)}")
