#!/usr/bin/env python3
"""Benchmark the jitted kernels against the pure-Python reference.

Times the three hot operations on seeded random workloads:

* gamma_search: staged branch-and-bound domination number
* canon_cols:   canonical labeling by lexicographic minimization
* extend_canon: canonical keys for all one-vertex extensions (atlas step)

Usage:
    python benchmarks/bench_kernels.py [--samples 200] [--n 9] [--seed 0]
"""

from __future__ import annotations

import argparse
import random
import time

from domcrit.enumeration import random_graph
from domcrit.kernels import get_backend


def _workload(samples: int, n: int, seed: int):
    rng = random.Random(seed)
    return [
        random_graph(rng, rng.randint(max(1, n - 2), n), rng.uniform(0.15, 0.85))
        for _ in range(samples)
    ]


def _time(fn, repeats: int = 3) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--samples", type=int, default=200)
    parser.add_argument("--n", type=int, default=9)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--extend-n", type=int, default=8, help="parent order for extend_canon")
    args = parser.parse_args()

    graphs = _workload(args.samples, args.n, args.seed)
    parents = _workload(6, args.extend_n, args.seed + 1)
    backends = {name: get_backend(name) for name in ("python", "numba")}

    # trigger jit compilation outside the timed region
    g0 = graphs[0]
    backends["numba"].gamma_search(g0.n, g0.closed_array())
    backends["numba"].canon_cols(g0.n, g0.adj_array())
    backends["numba"].extend_canon(parents[0].n, parents[0].adj_array())

    tasks = {
        "gamma_search": lambda mod: [
            mod.gamma_search(g.n, g.closed_array()) for g in graphs
        ],
        "canon_cols": lambda mod: [
            mod.canon_cols(g.n, g.adj_array()) for g in graphs
        ],
        "extend_canon": lambda mod: [
            mod.extend_canon(p.n, p.adj_array()) for p in parents
        ],
    }

    print(f"workload: {args.samples} graphs around order {args.n}, seed {args.seed}")
    print(f"{'kernel':<14} {'python':>12} {'numba':>12} {'speedup':>9}")
    for name, task in tasks.items():
        times = {}
        for backend_name, mod in backends.items():
            times[backend_name] = _time(lambda m=mod: task(m))
        ratio = times["python"] / times["numba"]
        print(
            f"{name:<14} {times['python'] * 1e3:>10.1f}ms {times['numba'] * 1e3:>10.1f}ms "
            f"{ratio:>8.1f}x"
        )

    # agreement spot check on this workload
    for g in graphs[:25]:
        assert backends["python"].gamma_search(g.n, g.closed_array()) == backends[
            "numba"
        ].gamma_search(g.n, g.closed_array())
    print("spot check: backends agree on this workload")


if __name__ == "__main__":
    main()
