#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Times Dirichlet convolution and the multiplicative sieves on both backends
(JIT warmup excluded), plus the exact big-int path at a small size for
scale.  Usage:

    python3 benchmarks/bench_convolve.py [--max-n 1000000] [--repeats 3]
"""

from __future__ import annotations

import argparse
import random
import time

import numpy as np

from arithring import kernels


def best_of(repeats, fn, *args):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def random_dense(n, rng):
    arr = np.zeros(n + 1, np.int64)
    arr[1:] = rng.integers(0, 10, size=n)
    return arr


def bench_convolution(sizes, repeats, backends):
    rng = np.random.default_rng(0xBE9C)
    print(f"{'convolve n':>12} " + " ".join(f"{b:>12}" for b in backends) + f" {'speedup':>9}")
    for n in sizes:
        a = random_dense(n, rng)
        b = random_dense(n, rng)
        times = []
        for backend in backends:
            with kernels.use_backend(backend):
                kernels.convolve_i64(a[: min(n, 1000) + 1], b[: min(n, 1000) + 1])  # warm
                times.append(best_of(repeats, kernels.convolve_i64, a, b))
        ratio = times[1] / times[0] if len(times) > 1 and times[0] > 0 else float("nan")
        print(f"{n:>12,} " + " ".join(f"{t * 1e3:>10.1f}ms" for t in times) + f" {ratio:>8.1f}x")


def bench_sieves(n, repeats, backends):
    jobs = [
        ("primes_mask", kernels.primes_mask, (n,)),
        ("mobius", kernels.mobius_i64, (n,)),
        ("euler_phi", kernels.phi_i64, (n,)),
        ("tau", kernels.tau_i64, (n,)),
        ("sigma_1", kernels.sigma_i64, (n, 1)),
        ("liouville", kernels.liouville_i64, (n,)),
    ]
    print(f"\n{'sieve at ' + format(n, ','):>12} " + " ".join(f"{b:>12}" for b in backends))
    for name, fn, args in jobs:
        times = []
        for backend in backends:
            with kernels.use_backend(backend):
                fn(1000, *args[1:])  # warm
                times.append(best_of(repeats, fn, *args))
        print(f"{name:>12} " + " ".join(f"{t * 1e3:>10.1f}ms" for t in times))


def bench_exact_path(repeats):
    from arithring import Domain, convolve, make

    rng = random.Random(1)
    n = 20_000
    f = make([rng.randint(0, 9) for _ in range(n)], Domain.Z)
    g = make([rng.randint(0, 9) for _ in range(n)], Domain.Z)
    with kernels.use_backend("python"):
        t = best_of(repeats, convolve, f, g)
    print(f"\nexact big-int path, convolve n={n:,}: {t * 1e3:.1f}ms")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=10**6)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    backends = ["numba", "numpy"] if kernels.HAVE_NUMBA else ["numpy"]
    if not kernels.HAVE_NUMBA:
        print("numba not importable; timing the numpy fallback only")

    sizes = [n for n in (10**4, 10**5, 10**6) if n <= args.max_n]
    bench_convolution(sizes, args.repeats, backends)
    bench_sieves(min(10**6, args.max_n), args.repeats, backends)
    bench_exact_path(args.repeats)


if __name__ == "__main__":
    main()
