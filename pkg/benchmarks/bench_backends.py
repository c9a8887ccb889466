"""Benchmark the numba kernels against the pure-numpy fallback.

Runs each heavy kernel on a representative workload with both backends
and prints a timing table. Usage:

    python3 benchmarks/bench_backends.py [--repeats N]

The numba backend is exercised once per workload before timing so jit
compilation does not pollute the numbers.
"""

from __future__ import annotations

import argparse
import math
import time

import numpy as np

from diagsum._kernels import numpy_impl
from diagsum.diag_sum import MatrixModel
from diagsum.dist_core import MERGE_TOL, AtomicDistribution, LatticeDistribution

try:
    from diagsum._kernels import numba_impl
except ImportError:  # pragma: no cover - benchmark still useful without numba
    numba_impl = None


def lattice_tables(n: int, seed: int):
    rng = np.random.default_rng(seed)
    entries = []
    for _ in range(n):
        row = []
        for _ in range(n):
            masses = rng.random(3) + 0.05
            row.append(
                LatticeDistribution.from_masses(
                    masses / masses.sum(), offset=int(rng.integers(-2, 3))
                )
            )
        entries.append(row)
    return MatrixModel(entries).packed()


def atomic_tables(n: int, seed: int):
    rng = np.random.default_rng(seed)
    entries = []
    for _ in range(n):
        row = []
        for _ in range(n):
            masses = rng.random(3) + 0.05
            locs = np.sort(rng.uniform(-2.0, 2.0, 3))
            row.append(AtomicDistribution.from_atoms(locs, masses / masses.sum()))
        entries.append(row)
    return MatrixModel(entries).packed()


def build_workloads():
    offs6, lmass6, llens6 = lattice_tables(6, seed=1)
    locs5, amass5, alens5 = atomic_tables(5, seed=2)
    rng = np.random.default_rng(3)
    z26 = rng.normal(size=(2, 6, 6)) + 1j * rng.normal(size=(2, 6, 6))
    m10 = rng.normal(size=(10, 10))
    m10 = np.ascontiguousarray(0.5 * (m10 + m10.T)).astype(np.complex128)
    ts = np.array([0.0, 0.5, 1.0, 2.0])
    return [
        (
            "exact lattice law, n=6 (3-point entries)",
            lambda impl: impl.lattice_diag_sum(offs6, lmass6, llens6),
        ),
        (
            "lattice pair smoothness table, n=6",
            lambda impl: impl.lattice_pair_nu(offs6, lmass6, llens6),
        ),
        (
            "lattice pair concentration table, n=6, 4 widths",
            lambda impl: impl.lattice_pair_zeta(offs6, lmass6, llens6, ts),
        ),
        (
            "exact atomic law, n=5 (3-atom entries)",
            lambda impl: impl.atomic_diag_sum(
                locs5, amass5, alens5, MERGE_TOL, 1 << 22
            ),
        ),
        (
            "atomic pair concentration table, n=5, 4 widths",
            lambda impl: impl.atomic_pair_zeta(locs5, amass5, alens5, ts, MERGE_TOL),
        ),
        (
            "generalized hafnian, k=2, n=6 (360 terms)",
            lambda impl: impl.gnhaf_raw(z26),
        ),
        (
            "hafnian, n=10 (945 matchings)",
            lambda impl: impl.haf_raw(m10),
        ),
    ]


def time_call(func, repeats: int) -> float:
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        func()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--repeats", type=int, default=5, help="timing repetitions (best is kept)"
    )
    args = parser.parse_args()
    workloads = build_workloads()
    name_width = max(len(name) for name, _ in workloads)
    header = f"{'workload':<{name_width}}  {'numpy':>10}  {'numba':>10}  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, call in workloads:
        t_numpy = time_call(lambda: call(numpy_impl), args.repeats)
        if numba_impl is None:
            print(f"{name:<{name_width}}  {t_numpy * 1e3:>8.2f}ms  {'n/a':>10}  {'n/a':>8}")
            continue
        call(numba_impl)  # absorb jit compilation
        t_numba = time_call(lambda: call(numba_impl), args.repeats)
        ratio = t_numpy / t_numba if t_numba > 0 else math.inf
        print(
            f"{name:<{name_width}}  {t_numpy * 1e3:>8.2f}ms  "
            f"{t_numba * 1e3:>8.2f}ms  {ratio:>7.1f}x"
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
