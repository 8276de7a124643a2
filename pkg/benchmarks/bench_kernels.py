#!/usr/bin/env python3
"""Timing comparison: compiled kernels vs the pure-Python fallback.

Runs each hot kernel with both backends and reports the best-of-N wall
time and the speedup.  Usage:

    python benchmarks/bench_kernels.py [--repeats 5]
"""

from __future__ import annotations

import argparse
import time

from alphafn import _kernels_py

try:
    from alphafn import _kernels_cy
except ImportError:
    _kernels_cy = None


def series_batch(k):
    for i in range(2000):
        k.alpha_sum(complex(1.5, 0.5), 3, 1e-13, 500)


def deriv_batch(k):
    for i in range(2000):
        k.alpha_deriv_sum(complex(0.75, 0.0), 2, 3, 1e-13, 500)


CASES = [
    ("alpha_sum x=1.5+0.5j s=3, 2000 calls", series_batch),
    ("alpha_deriv_sum k=3, 2000 calls", deriv_batch),
    ("alpha2_mean x=1 N=4096", lambda k: k.alpha2_mean(1.0, 4096)),
    ("bessel_mean a=3 b=4 N=4096", lambda k: k.bessel_mean(3.0, 4.0, 4096)),
    ("alpha3_real_mean x=1 N=128", lambda k: k.alpha3_real_mean(1.0, 128)),
    ("alpha3_real_mean x=1 N=256", lambda k: k.alpha3_real_mean(1.0, 256)),
    ("alpha3_complex_mean x=1 N=128", lambda k: k.alpha3_complex_mean(1.0, 128)),
    ("exp_alpha_mean x=1 s=4 N=512", lambda k: k.exp_alpha_mean(1.0, 4, 512, 1e-15, 500)),
]


def best_time(fn, backend, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn(backend)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    if _kernels_cy is None:
        print("compiled backend not built; timing pure Python only")
    header = f"{'kernel':<40} {'python [ms]':>12} {'cython [ms]':>12} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, fn in CASES:
        t_py = best_time(fn, _kernels_py, args.repeats)
        if _kernels_cy is not None:
            t_cy = best_time(fn, _kernels_cy, args.repeats)
            print(
                f"{name:<40} {t_py * 1e3:>12.3f} {t_cy * 1e3:>12.3f} "
                f"{t_py / t_cy:>7.1f}x"
            )
        else:
            print(f"{name:<40} {t_py * 1e3:>12.3f} {'-':>12} {'-':>8}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
