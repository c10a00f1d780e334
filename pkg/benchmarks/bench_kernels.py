#!/usr/bin/env python3
"""Compare the compiled quadrature kernels against the NumPy fallback.

Times the raw kernel, the shape function F, a full orbit solve, and a
trajectory reconstruction on both lanes, and reports the speedup plus the
worst relative deviation between lane results (which should sit at the
rounding floor).

Usage:
    python benchmarks/bench_kernels.py [--repeat 5] [--nodes 4096]
"""

import argparse
import math
import time

import numpy as np

import frozenplanet as fp
from frozenplanet._backend import active_kernel
from frozenplanet._gauss import gauss_level


def _best_of(repeat, fn, *args):
    best = math.inf
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def bench_ratio_pair(nodes, inner=200):
    level = gauss_level(nodes)
    a_values = [float(a) for a in -np.geomspace(1e-3, 1e3, inner)]

    def run():
        kernel = active_kernel()
        acc = 0.0
        for a in a_values:
            i_half, i_three_half = kernel.ratio_pair(a, level.s2, level.ws, level.wss)
            acc += i_three_half / i_half
        return acc

    return run


def bench_big_f(points=2000):
    xs = np.linspace(0.1, 6.0, points)

    def run():
        return sum(fp.big_f(1.0, float(x)) for x in xs)

    return run


def bench_solve():
    return lambda: fp.solve_orbit(2.0).qbar1


def bench_reconstruct():
    sol = fp.solve_orbit(2.0)
    return lambda: float(fp.reconstruct(sol, 1024).q1[1])


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5, help="timing repetitions (best-of)")
    parser.add_argument("--nodes", type=int, default=4096, help="node count for the raw kernel case")
    args = parser.parse_args()

    if not fp.has_compiled():
        raise SystemExit("compiled extension not built; nothing to compare")

    cases = [
        ("ratio_pair (64 nodes x 5000 calls)", bench_ratio_pair(64, inner=5000)),
        (f"ratio_pair ({args.nodes} nodes x 200 calls)", bench_ratio_pair(args.nodes)),
        ("big_f grid (2000 evaluations)", bench_big_f()),
        ("solve_orbit(2.0)", bench_solve()),
        ("reconstruct (1024 samples)", bench_reconstruct()),
    ]

    print(f"{'case':<42} {'compiled':>10} {'python':>10} {'speedup':>8} {'max rel dev':>12}")
    original = fp.kernel_name()
    try:
        for name, run in cases:
            fp.use_kernel("compiled")
            run()  # warm caches before timing
            t_c, r_c = _best_of(args.repeat, run)
            fp.use_kernel("python")
            run()
            t_p, r_p = _best_of(args.repeat, run)
            dev = abs(r_c - r_p) / max(abs(r_c), 1e-300)
            print(f"{name:<42} {t_c:>9.4f}s {t_p:>9.4f}s {t_p / t_c:>7.1f}x {dev:>12.2e}")
    finally:
        fp.use_kernel(original)


if __name__ == "__main__":
    main()
