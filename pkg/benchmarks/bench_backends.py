"""Time the numba and numpy backends on the same corpus work.

    python3 benchmarks/bench_backends.py --max-genus 4 --repeat 3

Each backend is warmed up once (numba compiles or loads its cache) before timing.
Outputs are compared, so a speedup never hides a disagreement.
"""

import argparse
import time

import numpy as np

from sgpcalc.corpus import SearchConfig, search_corpus
from sgpcalc.kernels import backend_module
from sgpcalc.search import scan_semigroup


def time_scan(backend, corpus, config, repeat):
    scan_semigroup(corpus[0].generators, config, backend)
    best, result = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = [scan_semigroup(S.generators, config, backend) for S in corpus]
        best = min(best, time.perf_counter() - t0)
    return best, result


def time_ord(backend, repeat, width=4000):
    mod = backend_module(backend)
    gens = np.asarray([7, 11, 13, 17], dtype=np.int64)
    mod.ord_table(gens, 16)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = mod.ord_table(gens, width)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-genus", type=int, default=4)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    config = SearchConfig(max_genus=args.max_genus)
    corpus = search_corpus(args.max_genus)
    rows = []
    t_nb, r_nb = time_scan("numba", corpus, config, args.repeat)
    t_np, r_np = time_scan("numpy", corpus, config, args.repeat)
    assert r_nb == r_np, "backends disagree on the corpus scan"
    rows.append((f"corpus scan, genus <= {args.max_genus} ({len(corpus)} semigroups)", t_nb, t_np))
    o_nb, a = time_ord("numba", args.repeat)
    o_np, b = time_ord("numpy", args.repeat)
    assert np.array_equal(a, b), "backends disagree on ord_table"
    rows.append(("ord_table <7,11,13,17>, width 4000", o_nb, o_np))

    print(f"{'workload':52} {'numba ms':>10} {'numpy ms':>10} {'speedup':>8}")
    for name, x, y in rows:
        print(f"{name:52} {1e3 * x:>10.2f} {1e3 * y:>10.2f} {y / x:>7.1f}x")


if __name__ == "__main__":
    main()
