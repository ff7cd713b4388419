"""Compare the compiled and pure-Python backends.

    python3 benchmarks/bench_backends.py [--n 100000] [--ops 200000] [--repeat 3]

Prints one row per (workload, backend) with the best wall time and the
speedup of each backend over the pure-Python one.
"""

import argparse
import random
import time

from spacegraph._backend import available_backends


def _words(count, seed):
    rng = random.Random(seed)
    return [rng.getrandbits(64) for _ in range(count)]


def bench_popcount(k, _fa, args):
    ws = _words(args.ops, 1)
    pc = k.popcount

    def run():
        s = 0
        for w in ws:
            s += pc(w)
        return s
    return run


def bench_select(k, _fa, args):
    ws = [w | 1 for w in _words(args.ops, 2)]
    sel, pc = k.select_in_word, k.popcount
    ranks = [1 + (i % pc(w)) for i, w in enumerate(ws)]

    def run():
        s = 0
        for w, r in zip(ws, ranks):
            s += sel(w, r)
        return s
    return run


def bench_findany(_k, FindAnySet, args):
    rng = random.Random(3)
    ops = [(rng.random(), rng.randrange(args.n)) for _ in range(args.ops)]

    def run():
        s = FindAnySet(args.n)
        hits = 0
        for r, i in ops:
            if r < 0.45:
                s.insert(i)
            elif r < 0.8:
                s.delete(i)
            elif r < 0.9:
                hits += i in s
            else:
                hits += s.findany() is not None
        return hits
    return run


WORKLOADS = {"popcount": bench_popcount, "select_in_word": bench_select,
             "findany_mixed": bench_findany}


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=100_000)
    ap.add_argument("--ops", type=int, default=200_000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    backends = available_backends()
    if "cython" not in backends:
        print("compiled backend not built; showing the pure-Python timings only")
    print(f"{'workload':<16}{'backend':<9}{'seconds':>10}{'speedup':>9}")
    for name, make in WORKLOADS.items():
        base = None
        for bname in ("python", "cython"):
            if bname not in backends:
                continue
            k, fa = backends[bname]
            t = best_of(make(k, fa, args), args.repeat)
            base = base or t
            print(f"{name:<16}{bname:<9}{t:>10.4f}{base / t:>8.2f}x")


if __name__ == "__main__":
    main()
