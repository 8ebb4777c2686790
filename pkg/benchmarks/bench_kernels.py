#!/usr/bin/env python3
"""Time the numba kernels against the numpy fallback.

Prints one JSON object per (kernel, n) with median timings in milliseconds.
Results agree between the two paths; the script checks that too.
"""

import argparse
import json
import statistics
import sys
import time

import numpy as np

from arcbrick import kernels
from arcbrick.arcs import enumerate_arcs
from arcbrick.diagrams import max_weak_example


def timed(func, runs):
    func()  # warmup, also triggers compilation
    out = []
    for _ in range(runs):
        t0 = time.perf_counter()
        func()
        out.append(time.perf_counter() - t0)
    return 1e3 * statistics.median(out)


def bench_pair_counts(n, runs):
    arcs = enumerate_arcs(n)
    a = kernels.pair_counts(arcs, use_jit=False)
    b = kernels.pair_counts(arcs, use_jit=True)
    assert all(np.array_equal(x, y) for x, y in zip(a, b))
    return {
        "kernel": "pair_counts",
        "n": n,
        "arcs": len(arcs),
        "numpy_ms": timed(lambda: kernels.pair_counts(arcs, use_jit=False), runs),
        "jit_ms": timed(lambda: kernels.pair_counts(arcs, use_jit=True), runs),
    }


def bench_longest(n, runs):
    allowed = kernels.weak_allowed(enumerate_arcs(n))
    bound = 2 * n - 2
    a = kernels.longest_compatible(allowed, bound, use_jit=False)
    b = kernels.longest_compatible(allowed, bound, use_jit=True)
    assert len(a) == len(b) == len(max_weak_example(n))
    return {
        "kernel": "longest_compatible",
        "n": n,
        "arcs": int(allowed.shape[0]),
        "numpy_ms": timed(lambda: kernels.longest_compatible(allowed, bound, use_jit=False), runs),
        "jit_ms": timed(lambda: kernels.longest_compatible(allowed, bound, use_jit=True), runs),
    }


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--runs", type=int, default=5)
    args = p.parse_args(argv)
    if not kernels.HAVE_NUMBA:
        print("numba unavailable or disabled; nothing to compare", file=sys.stderr)
        return 1
    for n in range(3, args.max_n + 1):
        for bench in (bench_pair_counts, bench_longest):
            row = bench(n, args.runs)
            row["speedup"] = round(row["numpy_ms"] / max(row["jit_ms"], 1e-9), 2)
            print(json.dumps(row), flush=True)
    return 0


if __name__ == "__main__":
    sys.exit(main())
