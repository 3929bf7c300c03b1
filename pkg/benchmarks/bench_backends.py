"""Benchmark the numba kernels against the pure-numpy fallback.

Usage:
    python3 benchmarks/bench_backends.py [--sizes 1000,100000,1000000] [--repeats 200]

Times the four hot kernels on random inputs of each size and prints a
comparison table. The numba column includes a warm-up call so compile
time never pollutes the numbers.
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from inforcer.backends import NUMBA_KERNELS, NUMPY_KERNELS


def _time_call(fn, args, repeats: int) -> float:
    fn(*args)  # warm-up (jit compile / cache load)
    best = np.inf
    for _ in range(3):
        t0 = time.perf_counter()
        for _ in range(repeats):
            fn(*args)
        best = min(best, (time.perf_counter() - t0) / repeats)
    return best


def _inputs(rng: np.random.Generator, n: int) -> dict:
    p = rng.dirichlet(np.ones(n))
    p = 0.9 * p + 0.1 / n
    u = rng.dirichlet(np.ones(n))
    log2p = np.log2(p)
    log2u = np.log2(np.maximum(u, 1e-300))
    m = max(2, int(np.sqrt(n)))
    a = rng.dirichlet(np.ones(m))
    b = rng.dirichlet(np.ones(m))
    t = 1.7 * log2p
    return {
        "weighted_log2_sumexp": (log2u, log2p, -1.3),
        "weighted_sum": (u, log2p),
        "outer_flatten": (a, b),
        "shifted_exp2_weights": (t,),
    }


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="1000,100000,1000000")
    parser.add_argument("--repeats", type=int, default=200)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    rng = np.random.default_rng(args.seed)

    if NUMBA_KERNELS is None:
        print("numba unavailable; nothing to compare")
        return

    print(f"{'kernel':<24}{'n':>10}{'numpy (us)':>14}{'numba (us)':>14}{'speedup':>10}")
    print("-" * 72)
    speedups = []
    for n in sizes:
        inputs = _inputs(rng, n)
        for kernel, call_args in inputs.items():
            t_np = _time_call(getattr(NUMPY_KERNELS, kernel), call_args, args.repeats)
            t_nb = _time_call(getattr(NUMBA_KERNELS, kernel), call_args, args.repeats)
            ratio = t_np / t_nb
            speedups.append(ratio)
            print(f"{kernel:<24}{n:>10}{t_np * 1e6:>14.2f}{t_nb * 1e6:>14.2f}{ratio:>9.2f}x")
    print("-" * 72)
    print(f"geometric mean speedup: {np.exp(np.mean(np.log(speedups))):.2f}x")


if __name__ == "__main__":
    main()
