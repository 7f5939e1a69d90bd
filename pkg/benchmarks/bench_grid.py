"""Benchmark the grid-scan kernels: compiled extension vs numpy fallback.

Usage: python benchmarks/bench_grid.py [--n-phi 256] [--n-beta 256]
       [--n-t 512] [--repeats 3]
"""
import argparse
import time

import numpy as np

from srdist._kernels import _grid_py
from srdist.algebra import klein_omega, random_su2

try:
    from srdist._kernels import _grid_cy
except ImportError:
    _grid_cy = None

TWO_PI = 2.0 * np.pi


def bench(fn, args, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-phi", type=int, default=256)
    parser.add_argument("--n-beta", type=int, default=256)
    parser.add_argument("--n-t", type=int, default=512)
    parser.add_argument("--beta-max", type=float, default=8.0)
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    g = random_su2(rng)
    target4 = np.array([g.a_re, g.a_im, g.b_re, g.b_im])
    target9 = np.ascontiguousarray(klein_omega(g).m, dtype=float).reshape(9)
    phis = np.linspace(0.0, TWO_PI, args.n_phi, endpoint=False)
    betas = np.linspace(-args.beta_max, args.beta_max, args.n_beta)

    print(f"grid {args.n_phi} x {args.n_beta} x {args.n_t}, best of {args.repeats}")
    for label, target, attr in [("scan_su2", target4, "scan_su2"),
                                ("scan_so3", target9, "scan_so3")]:
        t_py = bench(getattr(_grid_py, attr), (target, phis, betas, args.n_t),
                     args.repeats)
        print(f"  {label:9s} python  {t_py:8.3f} s")
        if _grid_cy is not None:
            t_cy = bench(getattr(_grid_cy, attr), (target, phis, betas, args.n_t),
                         args.repeats)
            print(f"  {label:9s} cython  {t_cy:8.3f} s   ({t_py / t_cy:5.1f}x faster)")
        else:
            print(f"  {label:9s} cython  unavailable (extension not built)")


if __name__ == "__main__":
    main()
