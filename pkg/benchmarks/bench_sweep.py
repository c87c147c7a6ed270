"""Compare the compiled and pure-Python terminal-cut kernels.

Usage: python3 benchmarks/bench_sweep.py [--n 8 10 12] [--max-size 3] [--seed 0]

Both kernels run the same sweep over all ordered disjoint terminal pairs; the
script checks they return identical source sides and counters, then prints
the wall time of each.
"""

import argparse
import random
import time

from hypercut import _backend
from hypercut.hypergraph import validate


def random_connected(n, m, rng):
    while True:
        edges = [rng.sample(range(n), rng.randint(2, min(4, n))) for _ in range(m)]
        G = validate(n, edges)
        if G.num_components() == 1:
            return G


def timed(G, backend, r):
    kernel = _backend.kernel_for(G, backend)
    start = time.perf_counter()
    sides, stats = kernel.sweep(r, r)
    return time.perf_counter() - start, sides, stats


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, nargs="+", default=[8, 10, 12])
    ap.add_argument("--max-size", type=int, default=3, help="bound on |S| and |T|")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--python-limit", type=int, default=14, help="skip pure Python above this n")
    args = ap.parse_args()
    if _backend._sweep_c is None:
        raise SystemExit("compiled kernel not built; run pip install -e . first")
    rng = random.Random(args.seed)
    print(f"{'n':>3} {'m':>3} {'pairs':>9} {'flows':>8} {'cython s':>9} {'python s':>9} {'speedup':>8}")
    for n in args.n:
        G = random_connected(n, 2 * n, rng)
        tc, sides_c, stats = timed(G, "cython", args.max_size)
        if n <= args.python_limit:
            tp, sides_p, stats_p = timed(G, "python", args.max_size)
            assert sides_c == sides_p and stats == stats_p, "kernels disagree"
            py, speed = f"{tp:9.3f}", f"{tp / tc:7.1f}x"
        else:
            py, speed = f"{'-':>9}", f"{'-':>8}"
        print(f"{n:>3} {G.m:>3} {stats['pairs']:>9} {stats['flow_calls']:>8} {tc:9.3f} {py} {speed}")


if __name__ == "__main__":
    main()
