"""Benchmark the numba kernels against the pure-numpy fallback.

Times the two hot operations on representative workloads: batched window
rank tables over F_32003 (the sampling path) and decode+scan over F_2 (the
exhaustive path).  Both backends are imported directly from rorc._kernels,
so this runs regardless of RORC_BACKEND.

Usage: python benchmarks/bench_kernels.py [--batch 512] [--repeat 3]
"""

import argparse
import time

import numpy as np

from rorc import Composition
from rorc import _kernels
from rorc.strata import window_tables


def time_call(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_rank_tables(batch, repeat):
    d = Composition.of(7, 5, 2, 3, 5, 1, 2, 6, 5)
    tab = window_tables(d)
    p = 32003
    rng = np.random.default_rng(0)
    mats = np.zeros((batch, d.n, d.n), dtype=np.int64)
    mats[:, tab.positions[:, 0], tab.positions[:, 1]] = rng.integers(
        0, p, size=(batch, tab.positions.shape[0]))
    rows = []
    args = (tab.starts, tab.stops, tab.spans, tab.kmax, p)
    t_np = time_call(lambda: _kernels.window_rank_table_numpy(mats, *args), repeat)
    rows.append(("rank tables (numpy)", t_np, batch / t_np))
    if _kernels.window_rank_table_numba is not None:
        _kernels.window_rank_table_numba(mats[:2], *args)  # compile
        t_nb = time_call(lambda: _kernels.window_rank_table_numba(mats, *args), repeat)
        rows.append(("rank tables (numba)", t_nb, batch / t_nb))
        rows.append(("  speedup", t_np / t_nb, None))
    return rows


def bench_exhaustive(repeat):
    d = Composition.of(2, 2, 2)
    tab = window_tables(d)
    total = 2 ** tab.positions.shape[0]  # 4096 matrices
    pos_r = np.ascontiguousarray(tab.positions[:, 0])
    pos_c = np.ascontiguousarray(tab.positions[:, 1])
    args = (tab.starts, tab.stops, tab.spans, tab.kmax, 2)

    def scan(decode, table):
        mats = decode(0, total, 2, pos_r, pos_c, d.n)
        table(mats, *args)

    rows = []
    t_np = time_call(
        lambda: scan(_kernels.decode_matrices_numpy, _kernels.window_rank_table_numpy),
        repeat)
    rows.append((f"F2 scan of {total} (numpy)", t_np, total / t_np))
    if _kernels.window_rank_table_numba is not None:
        scan(_kernels.decode_matrices_numba, _kernels.window_rank_table_numba)
        t_nb = time_call(
            lambda: scan(_kernels.decode_matrices_numba,
                         _kernels.window_rank_table_numba),
            repeat)
        rows.append((f"F2 scan of {total} (numba)", t_nb, total / t_nb))
        rows.append(("  speedup", t_np / t_nb, None))
    return rows


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--batch", type=int, default=512)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    print(f"numba available: {_kernels.window_rank_table_numba is not None}"
          f"   selected backend: {_kernels.BACKEND}")
    for rows in (bench_rank_tables(args.batch, args.repeat),
                 bench_exhaustive(args.repeat)):
        for name, value, rate in rows:
            if rate is None:
                print(f"{name:34s} {value:10.1f}x")
            else:
                print(f"{name:34s} {value:10.4f}s   {rate:10.0f} matrices/s")


if __name__ == "__main__":
    main()
