"""Compare the numba and numpy extension-search kernels.

    python benchmarks/bench_semantics.py [--free 12 16 20] [--repeat 3]

Random defeat graphs with no grounded core are searched in full, so the
timing is the raw subset walk. The first numba call (compilation, or a cache
load) is reported separately.
"""

import argparse
import time

import numpy as np

from hansarg import _kernels


def random_graph(n: int, density: float, seed: int):
    rng = np.random.default_rng(seed)
    adj = rng.random((n, n)) < density
    np.fill_diagonal(adj, False)
    out = [sum(1 << int(j) for j in np.flatnonzero(adj[i])) for i in range(n)]
    into = [sum(1 << int(i) for i in np.flatnonzero(adj[:, j])) for j in range(n)]
    return out, into


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--free", type=int, nargs="+", default=[12, 16, 20])
    p.add_argument("--density", type=float, default=0.15)
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args()

    out, into = random_graph(8, args.density, 0)
    t0 = time.perf_counter()
    _kernels.search(out, into, list(range(8)), 0, _kernels.STABLE, which="numba")
    print(f"numba first call: {time.perf_counter() - t0:.3f}s")

    print(f"{'free':>5} {'kind':>9} {'numba s':>10} {'numpy s':>10} {'speedup':>8} {'found':>6}")
    for k in args.free:
        out, into = random_graph(k, args.density, k)
        for kind, code in (("stable", _kernels.STABLE), ("complete", _kernels.COMPLETE)):
            free = list(range(k))
            a = _kernels.search(out, into, free, 0, code, which="numba")
            b = _kernels.search(out, into, free, 0, code, which="numpy")
            assert sorted(a) == sorted(b), "backends disagree"
            tn = best_of(lambda: _kernels.search(out, into, free, 0, code, which="numba"), args.repeat)
            tp = best_of(lambda: _kernels.search(out, into, free, 0, code, which="numpy"), args.repeat)
            print(f"{k:>5} {kind:>9} {tn:>10.4f} {tp:>10.4f} {tp / tn:>8.1f} {len(a):>6}")


if __name__ == "__main__":
    main()
