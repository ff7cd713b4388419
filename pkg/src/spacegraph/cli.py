"""``spacegraph`` command line.

Results go to stdout, diagnostics to stderr. Vertex ids are 1-based.
Exit codes: 0 ok, 1 parse error, 2 precondition violated, 3 --verify mismatch.
"""

import argparse
import sys

from . import bfs as bfs_mod
from .compactdfs import chains_compact, dfs_compact
from .dfs import chain_decomposition, dfs_unary
from .generate import FAMILIES, family
from .graph import GraphFormatError, build_cross_links, load, serialize
from .mst import mst as run_mst
from .order import degeneracy_order, toposort

EXIT_PARSE, EXIT_PRECONDITION, EXIT_VERIFY = 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


class Precondition(Exception):
    pass


class Mismatch(Exception):
    pass


def _common(p, graph=True):
    p.add_argument("--space-report", metavar="CSV", help="write the workspace ledger as CSV")
    p.add_argument("--verify", action="store_true", help="check against a brute-force oracle")
    p.add_argument("--stats", action="store_true", help="print operation counters to stderr")
    if graph:
        p.add_argument("file", help="graph file")


def build_parser():
    ap = _Parser(prog="spacegraph", description="Space-efficient graph algorithms.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("bfs", help="breadth-first order")
    p.add_argument("--variant", choices=("two-queue", "scan", "overflow"), default="two-queue")
    p.add_argument("--start", type=int, default=1)
    p.add_argument("--capacity-rule", default="log2")
    p.add_argument("--restart", action="store_true")
    p.add_argument("--levels", action="store_true", help="print 'v level' lines")
    _common(p)

    p = sub.add_parser("dfs", help="depth-first preorder")
    p.add_argument("--variant", choices=("unary", "compact"), default="unary")
    p.add_argument("--start", type=int, default=1)
    p.add_argument("--colors", type=int, choices=(2, 3), default=2)
    p.add_argument("--restart", action="store_true")
    _common(p)

    p = sub.add_parser("chains", help="chain decomposition, bridges, cut vertices")
    p.add_argument("--variant", choices=("unary", "compact"), default="unary")
    _common(p)

    p = sub.add_parser("mst", help="minimum spanning forest")
    p.add_argument("--capacity-rule", default="log2")
    _common(p)

    p = sub.add_parser("toposort", help="topological order")
    _common(p)

    p = sub.add_parser("degeneracy", help="d-degenerate order")
    p.add_argument("--d", type=int, required=True)
    _common(p)

    p = sub.add_parser("components", help="connected components")
    _common(p)

    p = sub.add_parser("bipartite", help="bipartiteness test")
    _common(p)

    p = sub.add_parser("gen", help="write a generated graph")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p", type=float, default=None)
    p.add_argument("--weighted", action="store_true")
    _common(p, graph=False)
    return ap


def _vertex(g, v1):
    if not 1 <= v1 <= g.n:
        raise Precondition(f"start vertex {v1} outside [1, {g.n}]")
    return v1 - 1


def _check(cond, what):
    if not cond:
        raise Mismatch(what)


# -- commands -------------------------------------------------------------------

def cmd_bfs(a, g, out):
    s = _vertex(g, a.start)
    if a.variant == "overflow":
        cap = bfs_mod.capacity_for(g.n, a.capacity_rule)
        res = bfs_mod.bfs_overflow(g, s, capacity=cap, restart=a.restart)
    elif a.variant == "scan":
        res = bfs_mod.bfs_scan(g, s, restart=a.restart)
    else:
        res = bfs_mod.bfs_two_queue(g, s, restart=a.restart)
    for v in res.order:
        out.append(f"{v + 1} {res.level[v]}" if a.levels else str(v + 1))
    if a.verify:
        from . import oracles
        lv, _ = oracles.bfs_levels(g, s, a.restart)
        _check(res.level == lv, "levels differ from queue BFS")
        roots = [v for v in res.order if res.level[v] == 0]
        _check(oracles.level_valid(g, res.order, res.level, roots), "level validity")
    return res.ledger, res.stats


def cmd_dfs(a, g, out):
    s = _vertex(g, a.start)
    if a.variant == "unary":
        build_cross_links(g)
        res = dfs_unary(g, s, restart=a.restart, colors=a.colors)
    else:
        res = dfs_compact(g, s, restart=a.restart)
    out.extend(str(v + 1) for v in res.preorder)
    if a.verify:
        from . import oracles
        pre, tree = oracles.dfs(g, s, a.restart)
        _check(res.preorder == pre, "preorder differs from stack DFS")
        _check(res.tree_edges == tree, "tree edges differ from stack DFS")
    return res.ledger, res.stats


def _yes(flag):
    return "yes" if flag else "no"


def cmd_chains(a, g, out):
    if g.directed:
        raise Precondition("chain decomposition needs an undirected graph")
    if a.variant == "unary":
        build_cross_links(g)
        rep = chain_decomposition(g)
    else:
        rep = chains_compact(g)
    for kind, verts in rep.chains:
        out.append(f"{kind}: " + " ".join(str(v + 1) for v in verts))
    out.append("bridges: " + ", ".join(f"{u + 1} {v + 1}" for u, v in rep.bridges))
    out.append("cutvertices: " + " ".join(str(v + 1) for v in rep.cut_vertices))
    out.append(f"2edge: {_yes(rep.two_edge_connected)}")
    out.append(f"biconnected: {_yes(rep.biconnected)}")
    if a.verify:
        from . import oracles
        br, cv, te, bc = oracles.connectivity_report(g)
        _check(rep.bridges == br, "bridges differ from edge-removal oracle")
        _check(rep.cut_vertices == cv, "cut vertices differ from vertex-removal oracle")
        _check(rep.two_edge_connected == te, "2-edge-connectivity verdict")
        _check(rep.biconnected == bc, "biconnectivity verdict")
        _check(rep.chain_count == g.m - g.n + 1, "chain count")
    return rep.ledger, rep.stats


def cmd_mst(a, g, out):
    if g.wts is None:
        raise Precondition("mst needs a weighted graph")
    res = run_mst(g, rule=a.capacity_rule, check=True)
    for u, v, w in res.edges:
        out.append(f"{u + 1} {v + 1} {w}")
    out.append(f"total {res.total}")
    if a.verify:
        from . import oracles
        _check(res.total == oracles.kruskal(g)[0], "weight differs from Kruskal")
        _check(oracles.is_spanning_forest(g, res.edges), "not a spanning forest")
    return res.ledger, res.stats


def cmd_toposort(a, g, out):
    res = toposort(g)
    if res.ok:
        out.extend(str(v + 1) for v in res.order)
    else:
        out.append("cycle detected")
    if a.verify:
        from . import oracles
        _check(res.ok == (not oracles.has_cycle(g)), "cycle verdict")
        _check(not res.ok or oracles.topo_valid(g, res.order), "order violates an edge")
    return res.ledger, res.stats


def cmd_degeneracy(a, g, out):
    if a.d < 0:
        raise Precondition("--d must be non-negative")
    res = degeneracy_order(g, a.d)
    if res.ok:
        out.extend(str(v + 1) for v in res.order)
    else:
        out.append(f"not {a.d}-degenerate")
    if a.verify:
        from . import oracles
        _check(res.ok == (a.d >= oracles.degeneracy(g)), "degeneracy verdict")
        _check(not res.ok or oracles.degeneracy_valid(g, res.order, a.d), "order invalid")
    return res.ledger, res.stats


def cmd_components(a, g, out):
    if g.directed:
        raise Precondition("components are computed for undirected graphs")
    if g.n == 0:
        out.append("components 0")
        return None, {}
    res = bfs_mod.bfs_two_queue(g, 0, restart=True)
    for v in range(g.n):
        out.append(f"{v + 1} {res.component[v] + 1}")
    out.append(f"components {res.stats['components']}")
    if a.verify:
        from . import oracles
        _check(res.component == oracles.components(g), "component labels")
    return res.ledger, res.stats


def cmd_bipartite(a, g, out):
    if g.directed:
        raise Precondition("bipartiteness is tested on undirected graphs")
    res = bfs_mod.is_bipartite(g)
    out.append(_yes(res.bipartite))
    if res.witness:
        (u, lu), (v, lv) = res.witness
        out.append(f"odd edge: {u + 1} {v + 1} (levels {lu} {lv})")
    if a.verify:
        from . import oracles
        _check(res.bipartite == oracles.bipartite(g), "bipartite verdict")
    return None, {}


COMMANDS = {"bfs": cmd_bfs, "dfs": cmd_dfs, "chains": cmd_chains, "mst": cmd_mst,
            "toposort": cmd_toposort, "degeneracy": cmd_degeneracy,
            "components": cmd_components, "bipartite": cmd_bipartite}


def main(argv=None):
    a = build_parser().parse_args(argv)
    if a.command == "gen":
        if a.n < 0:
            print("spacegraph: --n must be non-negative", file=sys.stderr)
            return EXIT_PRECONDITION
        sys.stdout.write(serialize(family(a.family, a.n, a.seed, a.weighted, a.p)))
        return 0
    try:
        g = load(a.file)
    except GraphFormatError as e:
        print(f"spacegraph: {a.file}: {e}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as e:
        print(f"spacegraph: {e}", file=sys.stderr)
        return EXIT_PARSE
    out = []
    try:
        ledger, stats = COMMANDS[a.command](a, g, out)
    except (Precondition, ValueError, IndexError) as e:
        print(f"spacegraph: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    except Mismatch as e:
        if out:
            sys.stdout.write("\n".join(out) + "\n")
        print(f"spacegraph: verify failed: {e}", file=sys.stderr)
        return EXIT_VERIFY
    if out:
        sys.stdout.write("\n".join(out) + "\n")
    if a.verify:
        print("verify: ok", file=sys.stderr)
    if a.stats:
        for k in sorted(stats or {}):
            print(f"{k} {stats[k]}", file=sys.stderr)
        if ledger is not None:
            print(f"peak_bits {ledger.peak()}", file=sys.stderr)
    if a.space_report and ledger is not None:
        ledger.to_csv(a.space_report)
    return 0


if __name__ == "__main__":
    sys.exit(main())
