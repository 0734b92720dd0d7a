#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python twins.

Usage:
    python3 benchmarks/bench_kernels.py [--repeat N]

Times the three hot loops (exact charpoly, Jacobi eigensolve, labeled
mask sweep) plus one end-to-end exhaustive sweep, and prints a table
with the speedup of the extension over the fallback.
"""

from __future__ import annotations

import argparse
import random
import time

from neumaier._kernels import load_kernel
from neumaier.graphs import from_edge_mask


def timeit(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_charpoly(kernel, graphs):
    def run():
        for adj, n in graphs:
            kernel.charpoly_adj(adj, n)

    return run


def bench_jacobi(kernel, mats):
    def run():
        for flat, n in mats:
            kernel.jacobi_eigenvalues(flat, n)

    return run


def bench_sweep(kernel, n):
    total = 1 << (n * (n - 1) // 2)

    def run():
        kernel.sweep_masks(n, 0, total, 1e-7)

    return run


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    try:
        fast = load_kernel("cython")
    except ImportError:
        raise SystemExit(
            "compiled kernel not built; reinstall with a working C toolchain"
        )
    slow = load_kernel("python")

    rng = random.Random(42)
    graphs = []
    for _ in range(2000):
        n = 7
        g = from_edge_mask(n, rng.getrandbits(21))
        graphs.append((g.adj, n))

    mats = []
    for _ in range(50):
        n = 24
        flat = [0.0] * (n * n)
        for i in range(n):
            for j in range(i, n):
                v = rng.uniform(-2, 2)
                flat[i * n + j] = flat[j * n + i] = v
        mats.append((flat, n))

    rows = []
    for name, builder in [
        ("charpoly n=7 x2000", bench_charpoly),
        ("jacobi 24x24 x50", bench_jacobi),
    ]:
        payload = graphs if "charpoly" in name else mats
        tf = timeit(builder(fast, payload), args.repeat)
        ts = timeit(builder(slow, payload), args.repeat)
        rows.append((name, tf, ts))

    tf = timeit(bench_sweep(fast, 6), args.repeat)
    ts = timeit(bench_sweep(slow, 6), 1)  # slow enough to run once
    rows.append(("sweep_masks n=6 (32768 graphs)", tf, ts))

    print(f"{'benchmark':<32} {'cython':>10} {'python':>10} {'speedup':>8}")
    for name, tf, ts in rows:
        print(f"{name:<32} {tf * 1e3:>8.1f}ms {ts * 1e3:>8.1f}ms {ts / tf:>7.1f}x")


if __name__ == "__main__":
    main()
