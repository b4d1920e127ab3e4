#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-numpy fallback.

Times each hot kernel and an end-to-end clustering run under both backends
and prints the per-case speedup. Run from the repository root:

    python benchmarks/bench_kernels.py [--n 2000] [--d 16] [--c 5] [--repeat 20]
"""

import argparse
import time

import numpy as np

from fuzzysweep import _kernels as K
from fuzzysweep.core import ClusterConfig
from fuzzysweep.fcm import fcm_run
from fuzzysweep.gk import GkConfig, gk_run


def timeit(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def build_cases(n, d, c, repeat):
    rng = np.random.default_rng(0)
    X = rng.normal(size=(n, d))
    V = rng.normal(size=(c, d))
    raw = rng.random((c, n)) + 1e-6
    U = raw / raw.sum(axis=0)
    B = rng.normal(size=(c, d, d))
    A = np.ascontiguousarray(np.einsum("cij,ckj->cik", B, B) + 0.05 * np.eye(d))
    D = K.sq_dist_matrix(X, V)
    w = np.ascontiguousarray(U[0] ** 2)
    v0 = np.ascontiguousarray(V[0])

    cases = {
        "sq_dist_matrix": lambda: K.sq_dist_matrix(X, V),
        "gk_dist_matrix": lambda: K.gk_dist_matrix(X, V, A),
        "memberships_from_dist": lambda: K.memberships_from_dist(D, 2.0),
        "weighted_center_sums": lambda: K.weighted_center_sums(U, X, 2.0),
        "objective_from_dist": lambda: K.objective_from_dist(U, D, 2.0),
        "weighted_scatter": lambda: K.weighted_scatter(X, v0, w),
        "fcm_run (end to end)": lambda: fcm_run(X, ClusterConfig(k=c, seed=1, max_iter=50)),
        "gk_run (end to end)": lambda: gk_run(X, GkConfig(base=ClusterConfig(k=c, seed=1, max_iter=25))),
    }
    return {name: (fn, repeat) for name, fn in cases.items()}


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=2000)
    parser.add_argument("--d", type=int, default=16)
    parser.add_argument("--c", type=int, default=5)
    parser.add_argument("--repeat", type=int, default=20)
    args = parser.parse_args()

    backends = K.available_backends()
    if "compiled" not in backends:
        print("compiled backend unavailable; build it with: pip install -e . --no-build-isolation")

    cases = build_cases(args.n, args.d, args.c, args.repeat)
    print(f"N={args.n} d={args.d} c={args.c} (best of {args.repeat})")
    header = f"{'kernel':<24}" + "".join(f"{b:>14}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for name, (fn, repeat) in cases.items():
        times = {}
        for backend in backends:
            with K.using_backend(backend):
                fn()  # warm up
                times[backend] = timeit(fn, repeat)
        row = f"{name:<24}" + "".join(f"{times[b] * 1e3:>12.3f}ms" for b in backends)
        if len(backends) == 2:
            row += f"{times['python'] / times['compiled']:>9.2f}x"
        print(row)


if __name__ == "__main__":
    main()
