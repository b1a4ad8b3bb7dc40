#!/usr/bin/env python3
"""Benchmark the compiled counting kernels against the NumPy fallback.

Runs each backend on representative table workloads (diagonal scan-sized
tables, a general genus form, an all-odd parity table) plus one end-to-end
identity scan, and prints a timing table.  Results are cross-checked for
exact agreement while timing.

Usage: python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import time

import numpy as np

from triforms import _countpy

try:
    from triforms import _countcore
except ImportError:
    _countcore = None

WORKLOADS = [
    ("diagonal <1,1,7>, limit 64512", "ternary",
     (1, 1, 7, 0, 0, 0), 64512, (-1, -1, -1)),
    ("diagonal <7,15,105>, limit 64508", "ternary",
     (7, 15, 105, 0, 0, 0), 64508, (-1, -1, -1)),
    ("all-odd <1,3,5>, limit 16009", "ternary",
     (1, 3, 5, 0, 0, 0), 16009, (1, 1, 1)),
    ("general 4x^2+16y^2+22z^2+14yz-2xz+4xy, limit 8046", "ternary",
     (4, 16, 22, 14, -2, 4), 8046, (-1, -1, -1)),
    ("general 8x^2+20y^2+29z^2+4yz+8xz+8xy, limit 20000", "ternary",
     (8, 20, 29, 4, 8, 8), 20000, (-1, -1, -1)),
    ("binary all-odd x^2+15y^2, limit 40000", "binary",
     (1, 15, 0), 40000, (1, 1)),
]


def run(mod, kind, coeffs, limit, parity):
    if kind == "ternary":
        return mod.ternary_table(*coeffs, limit, *parity)
    return mod.binary_table(*coeffs, limit, *parity)


def best_of(repeat, fn):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if _countcore is None:
        print("compiled kernel not available; timing the fallback only\n")

    header = f"{'workload':55s} {'python':>9s} {'compiled':>9s} {'speedup':>8s}"
    print(header)
    print("-" * len(header))
    for name, kind, coeffs, limit, parity in WORKLOADS:
        t_py, out_py = best_of(args.repeat,
                               lambda: run(_countpy, kind, coeffs, limit, parity))
        if _countcore is None:
            print(f"{name:55s} {t_py:8.4f}s {'-':>9s} {'-':>8s}")
            continue
        t_c, out_c = best_of(args.repeat,
                             lambda: run(_countcore, kind, coeffs, limit, parity))
        if not np.array_equal(out_py, out_c):
            raise SystemExit(f"backend disagreement on: {name}")
        print(f"{name:55s} {t_py:8.4f}s {t_c:8.4f}s {t_py / t_c:7.1f}x")

    # End-to-end: the genus-identity scan leans on general-form tables.
    import os
    from triforms.scans import run_scan
    t0 = time.perf_counter()
    rep = run_scan("siegel", 500)
    t_scan = time.perf_counter() - t0
    backend = "compiled" if _countcore is not None else "python"
    assert rep.all_passed
    print(f"\nsiegel scan m<=500 on selected backend ({backend}): {t_scan:.3f}s "
          f"({len(rep)} records)")
    if os.environ.get("TRIFORMS_BACKEND"):
        print(f"TRIFORMS_BACKEND={os.environ['TRIFORMS_BACKEND']} was set; "
              "the scan above honored it")


if __name__ == "__main__":
    main()
