"""Acceptance criteria 1-13.

Each test carries a ``criterion`` marker; the terminal summary prints one
PASS/FAIL line per criterion. Frozen constants were measured once with the
compiled backend and act as regression ceilings.

Run alone with ``pytest tests/test_acceptance.py -v``.
"""

import math
import os
import random
import subprocess
import sys
import time

import pytest

from spacegraph import oracles
from spacegraph.bfs import bfs_overflow, bfs_scan, bfs_two_queue, capacity_for
from spacegraph.compactdfs import chains_compact, dfs_compact
from spacegraph.decseq import DecrementSeq
from spacegraph.dfs import chain_decomposition, dfs_unary
from spacegraph.findany import FindAnySet, new_lazy
from spacegraph.generate import FAMILIES, dag, family, gnm
from spacegraph.graph import build_cross_links, from_edges
from spacegraph.mst import mst
from spacegraph.order import degeneracy_order, toposort

from conftest import connected_graph, random_graph

# aux bits / (n lglg n / lg n), worst over n = 2^16 .. 2^24
FINDANY_C = 2.47
# (peak - n) / (n/f) = (peak - n) / (k lg n), worst over the MST corpus
MST_C = 607.0
# (peak - 4n) / (n (1 + lg(2m/n))) for dfs_compact at (2^14, 2^17)
COMPACT_DFS_C = 2.29
# (peak - 4m - 3n) / (m + n) for dfs_unary at (2^14, 2^17)
UNARY_DFS_SLACK = 0.066


def criterion(num, title):
    return pytest.mark.criterion(num, title)


@criterion(1, "findany oracle equivalence, 10^6 ops at n=10^5 under 5 s")
def test_c01_findany_oracle(record_property):
    n, ops = 100_000, 1_000_000
    rng = random.Random(1)
    script = [(rng.random(), rng.randrange(n)) for _ in range(ops)]
    fs = FindAnySet(n)
    ref = bytearray(n)
    size = 0
    t0 = time.perf_counter()
    for step, (r, i) in enumerate(script):
        if r < 0.4:
            fs.insert(i)
            size += not ref[i]
            ref[i] = 1
        elif r < 0.75:
            fs.delete(i)
            size -= ref[i]
            ref[i] = 0
        elif r < 0.9:
            assert fs.contains(i) == bool(ref[i])
        else:
            got = fs.findany()
            assert (got is None) if size == 0 else ref[got]
        if step % 250_000 == 0:
            assert sorted(fs.enumerate()) == [j for j in range(n) if ref[j]]
    elapsed = time.perf_counter() - t0
    assert sorted(fs.enumerate()) == [j for j in range(n) if ref[j]]
    assert len(fs) == size
    record_property("seconds", f"{elapsed:.2f}")
    assert elapsed < 5.0


@criterion(2, "O(1) certification: <= 64 probes per op; lazy probes independent of n")
def test_c02_probe_ceiling(record_property):
    worst_fa = worst_ds = 0
    lazy_counts = []
    for e in (10, 16, 20):
        n = 1 << e
        rng = random.Random(e)
        fs = FindAnySet(n)
        for _ in range(20_000):
            i = rng.randrange(n)
            before = fs.probes
            r = rng.random()
            if r < 0.4:
                fs.insert(i)
            elif r < 0.8:
                fs.delete(i)
            elif r < 0.9:
                fs.contains(i)
            else:
                fs.findany()
            worst_fa = max(worst_fa, fs.probes - before)

        xs = [rng.choice((0, 1, 2, 5, 40, 700, 5000)) for _ in range(n)]
        ds = DecrementSeq(xs)
        for _ in range(20_000):
            i = rng.randrange(n)
            before = ds.probes
            if rng.random() < 0.8:
                ds.dec_if_nonzero(i)
            else:
                ds.is_zero(i)
            worst_ds = max(worst_ds, ds.probes - before)

        lazy = new_lazy(n, garbage=random.Random(1000 + e))
        built = lazy.probes
        lazy.insert(5)
        lazy.contains(5)
        lazy.findany()
        lazy.delete(5)
        lazy.contains(7)
        lazy.findany()
        lazy_counts.append((built, lazy.probes))
    record_property("findany_max", worst_fa)
    record_property("decseq_max", worst_ds)
    record_property("lazy", lazy_counts[0])
    assert worst_fa <= 64
    assert worst_ds <= 64
    assert len(set(lazy_counts)) == 1
    assert lazy_counts[0][0] == 0


@criterion(3, "findany aux <= C n lglg n / lg n; aux/n strictly decreasing 2^16..2^24")
def test_c03_findany_space(record_property):
    per_n = []
    worst_c = 0.0
    for e in range(16, 25):
        n = 1 << e
        fs = FindAnySet(n)
        principal, aux = fs.bit_usage()
        assert principal + aux == 64 * fs.words_allocated()
        per_n.append(aux / n)
        worst_c = max(worst_c, aux / (n * math.log2(e) / e))
    record_property("aux_per_n", f"{per_n[0]:.3f}->{per_n[-1]:.3f}")
    record_property("C", f"{worst_c:.3f}")
    assert all(b < a for a, b in zip(per_n, per_n[1:]))
    assert worst_c <= FINDANY_C


def _bfs_corpus():
    rng = random.Random(4)
    for _ in range(500):
        n = rng.randint(1, 500)
        m = rng.randint(0, 3 * n)
        yield random_graph(rng, n, m, directed=rng.random() < 0.3), rng.random() < 0.5
    for name in FAMILIES:
        for n in (1, 2, 17, 100, 400):
            yield family(name, n, seed=n), True


@criterion(4, "BFS variants agree with each other and the queue oracle")
def test_c04_bfs_agreement(record_property):
    graphs = 0
    for g, restart in _bfs_corpus():
        want, _ = oracles.bfs_levels(g, 0, restart)
        for run in (bfs_two_queue, bfs_scan, bfs_overflow):
            res = run(g, 0, restart=restart)
            assert res.level == want
            roots = [v for v in res.order if res.level[v] == 0]
            assert oracles.level_valid(g, res.order, res.level, roots)
        graphs += 1
    record_property("graphs", graphs)


@criterion(5, "BFS space: A peak <= 2.5n at n=2^16; B color store <= 1.62n")
def test_c05_bfs_space(record_property):
    n = 1 << 16
    g = gnm(n, 4 * n, seed=2)
    a = bfs_two_queue(g, 0, restart=True)
    assert a.ledger.audit() == []
    b = bfs_scan(g, 0, restart=True)
    colors = next(e for e in b.ledger.entries() if e.label == "colors")
    record_property("A_peak_per_n", f"{a.ledger.peak() / n:.4f}")
    record_property("B_colors_per_n", f"{colors.principal / n:.4f}")
    assert a.ledger.peak() <= 2.5 * n
    assert colors.principal <= 1.62 * n
    # 40 trits per 64-bit word, exactly
    assert colors.principal == 64 * -(-n // 40)


@criterion(6, "BFS work: B scans <= n+2 per search; C fallback levels <= n/capacity")
def test_c06_bfs_work(record_property):
    worst_b = worst_c = 0.0
    extra = [family("path", 300), family("star", 300), family("grid", 400)]
    for g, restart in list(_bfs_corpus()) + [(x, True) for x in extra]:
        single = bfs_scan(g, 0)
        assert single.stats["scans"] <= g.n + 2
        worst_b = max(worst_b, single.stats["scans"] / (g.n + 2))
        if restart:
            # each restarted search ends with its own two idle scans
            b = bfs_scan(g, 0, restart=True)
            assert b.stats["scans"] <= g.n + 2 * b.stats["components"]
        for cap in {1, 2, capacity_for(g.n, "log2")}:
            c = bfs_overflow(g, 0, capacity=cap, restart=restart)
            assert c.stats["fallback_levels"] <= g.n / cap
            worst_c = max(worst_c, c.stats["fallback_levels"] * cap / g.n)
    record_property("B_scans/(n+2)", f"{worst_b:.3f}")
    record_property("C_fallback*cap/n", f"{worst_c:.3f}")


@criterion(7, "MST equals Kruskal; spanning forest; pool within capacity; peak <= n + C n/f")
def test_c07_mst(record_property):
    rng = random.Random(7)
    worst = big = 0.0
    for _ in range(200):
        n = rng.randint(2, 1000)
        g = connected_graph(rng, n, rng.randint(0, 3 * n), weighted=True)
        res = mst(g, check=True)
        assert res.total == oracles.kruskal(g)[0]
        assert oracles.is_spanning_forest(g, res.edges)
        assert res.stats["max_pool"] <= res.stats["capacity"]
        assert res.ledger.audit() == []
        n_over_f = res.stats["capacity"] * math.log2(n)
        c = (res.ledger.peak() - n) / n_over_f
        worst = max(worst, c)
        if n >= 500:
            big = max(big, c)
    record_property("C", f"{worst:.1f}")
    record_property("C_n>=500", f"{big:.1f}")
    assert worst <= MST_C


_PATTERNS = {"values<=2": [0, 1, 2, 1], "values<=8": list(range(9)),
             "values<=1000": [0, 1000, 3, 500, 17, 999, 250, 2]}


@criterion(8, "decrement sequence: 10^6 ops match counters; slack/(m+n) falls as m+n doubles")
def test_c08_decseq(record_property):
    rng = random.Random(8)
    n = 10_000
    xs = [rng.randint(0, 100) for _ in range(n)]
    ds = DecrementSeq(xs)
    ref = list(xs)
    for _ in range(1_000_000):
        i = rng.randrange(n)
        if rng.random() < 0.75:
            assert ds.dec_if_nonzero(i) == (ref[i] > 0)
            if ref[i]:
                ref[i] -= 1
        else:
            assert ds.is_zero(i) == (ref[i] == 0)
    assert [ds.value(i) for i in range(n)] == ref

    for name, pat in _PATTERNS.items():
        ratios = []
        per = sum(pat) + len(pat)
        for e in range(16, 21):
            cells = (1 << e) * len(pat) // per
            seq = DecrementSeq([pat[i % len(pat)] for i in range(cells)])
            p, a = seq.bit_usage()
            assert p + a == 64 * seq.words_allocated()
            ratios.append((p + a - (seq.m + 2 * cells)) / (seq.m + cells))
        record_property(name, f"{ratios[0]:.4f}->{ratios[-1]:.4f}")
        assert all(b < a for a, b in zip(ratios, ratios[1:])), (name, ratios)


@criterion(9, "toposort/degeneracy verdicts and orders match oracles; slack shrinks")
def test_c09_orders(record_property):
    rng = random.Random(9)
    for i in range(500):
        n = rng.randint(1, 200)
        g = dag(n, rng.uniform(0, 0.1), seed=i)
        res = toposort(g)
        assert res.ok and oracles.topo_valid(g, res.order)
        c = random_graph(rng, n, rng.randint(0, 3 * n), directed=True)
        res = toposort(c)
        assert res.ok == (not oracles.has_cycle(c))
        if res.ok:
            assert oracles.topo_valid(c, res.order)
    for i in range(500):
        n = rng.randint(1, 200)
        g = random_graph(rng, n, rng.randint(0, 4 * n))
        d = rng.randint(0, 6)
        res = degeneracy_order(g, d)
        assert res.ok == (d >= oracles.degeneracy(g))
        if res.ok:
            assert oracles.degeneracy_valid(g, res.order, d)

    topo, degen = [], []
    for e in (12, 14, 16):
        n = 1 << e
        und = gnm(n, 4 * n, seed=e)
        g = from_edges(n, [(min(u, v), max(u, v)) for u, v in und.edges], directed=True)
        t = toposort(g)
        assert t.ok
        topo.append((t.ledger.peak() - (g.m + 3 * n)) / (g.m + n))
        d = degeneracy_order(und, 8)
        bound = d.ledger.bound_bits
        degen.append((d.ledger.peak() - bound) / (bound - 2 * n))
    record_property("topo_slack", "/".join(f"{x:.3f}" for x in topo))
    record_property("degen_slack", "/".join(f"{x:.3f}" for x in degen))
    assert all(b < a for a, b in zip(topo, topo[1:]))
    assert all(b < a for a, b in zip(degen, degen[1:]))


@criterion(10, "dfs_unary and dfs_compact equal the stack DFS exactly")
def test_c10_dfs_exact(record_property):
    rng = random.Random(10)
    for i in range(1000):
        n = rng.randint(1, 2000)
        directed = i % 2 == 1
        g = build_cross_links(random_graph(rng, n, rng.randint(0, 2 * n), directed))
        s = rng.randrange(n)
        restart = i % 3 != 0
        pre, tree = oracles.dfs(g, s, restart)
        u = dfs_unary(g, s, restart=restart, colors=2 if i % 4 else 3)
        c = dfs_compact(g, s, restart=restart)
        assert u.preorder == pre and u.tree_edges == tree
        assert c.preorder == pre and c.tree_edges == tree
    record_property("graphs", 1000)


def _chain_edges(chains):
    out = []
    for _, verts in chains:
        out += [(min(a, b), max(a, b)) for a, b in zip(verts, verts[1:])]
    return out


@criterion(11, "bridges, cut vertices, 2EC and biconnectivity match removal oracles")
def test_c11_connectivity(record_property):
    rng = random.Random(11)
    bridgeless = 0
    for _ in range(500):
        n = rng.randint(1, 300)
        g = build_cross_links(connected_graph(rng, n, rng.randint(0, n)))
        br, cv, te, bc = oracles.connectivity_report(g)
        a, b = chain_decomposition(g), chains_compact(g)
        for rep in (a, b):
            assert (rep.bridges, rep.cut_vertices) == (br, cv)
            assert (rep.two_edge_connected, rep.biconnected) == (te, bc)
            assert rep.chain_count == g.m - g.n + 1
        assert a.summary() == b.summary()
        if not br:
            bridgeless += 1
            used = _chain_edges(a.chains)
            assert sorted(used) == sorted((min(u, v), max(u, v)) for u, v in g.edges)
    record_property("bridgeless", bridgeless)


@criterion(12, "DFS space at (2^14, 2^17): unary <= 4m+3n+slack; compact <= C n(1+lg(2m/n)) + 4n")
def test_c12_dfs_space(record_property):
    n, m = 1 << 14, 1 << 17
    g = build_cross_links(gnm(n, m, seed=1))
    u = dfs_unary(g, 0, restart=True)
    c = dfs_compact(g, 0, restart=True)
    assert u.preorder == c.preorder
    assert u.ledger.audit() == [] and c.ledger.audit() == []
    slack = (u.ledger.peak() - 4 * m - 3 * n) / (m + n)
    cc = (c.ledger.peak() - 4 * n) / (n * (1 + math.log2(2 * m / n)))
    record_property("unary_slack", f"{slack:.4f}")
    record_property("compact_C", f"{cc:.3f}")
    assert slack <= UNARY_DFS_SLACK
    assert cc <= COMPACT_DFS_C


def _cli(*argv):
    r = subprocess.run([sys.executable, "-m", "spacegraph.cli", *argv],
                       capture_output=True)
    return r.returncode, r.stdout, r.stderr


@criterion(13, "every CLI command is byte-reproducible")
def test_c13_cli_determinism(tmp_path, record_property):
    files = {}
    for name, fam, extra in (("und", "gnp", ["--weighted"]), ("grid", "grid", ["--weighted"]),
                             ("dag", "dag", []), ("cyc", "cycle", [])):
        code, out, _ = _cli("gen", f"--family={fam}", "--n=60", "--seed=5", *extra)
        assert code == 0
        path = tmp_path / f"{name}.txt"
        path.write_bytes(out)
        files[name] = str(path)
    runs = [
        ["bfs", "--variant=two-queue", "--restart", "--levels", files["und"]],
        ["bfs", "--variant=scan", "--restart", files["und"]],
        ["bfs", "--variant=overflow", "--capacity-rule=const:2", "--restart", files["und"]],
        ["dfs", "--variant=unary", "--restart", files["und"]],
        ["dfs", "--variant=compact", "--restart", files["dag"]],
        ["dfs", "--colors=3", "--restart", files["dag"]],
        ["chains", "--variant=unary", files["grid"]],
        ["chains", "--variant=compact", files["cyc"]],
        ["mst", "--capacity-rule=loglog", files["und"]],
        ["toposort", files["dag"]],
        ["degeneracy", "--d=2", files["grid"]],
        ["components", files["und"]],
        ["bipartite", files["und"]],
        ["gen", "--family=gnp", "--n=50", "--seed=9", "--weighted"],
    ]
    for argv in runs:
        outs = []
        for k in range(2):
            csv = tmp_path / f"space{k}.csv"
            extra = [] if argv[0] == "gen" else ["--stats", f"--space-report={csv}"]
            code, out, err = _cli(*argv[:-1], *extra, argv[-1]) if extra else _cli(*argv)
            report = csv.read_bytes() if extra and csv.exists() else b""
            outs.append((code, out, err, report))
        assert outs[0] == outs[1], argv
        assert outs[0][0] == 0, (argv, outs[0][2])
    record_property("commands", len(runs))


if __name__ == "__main__":
    sys.exit(pytest.main([os.path.abspath(__file__), "-v"]))
