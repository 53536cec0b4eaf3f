#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

The workloads mirror the package's hot paths: batched 2x2 ranks mod p
(ring scans, distributions, weight tables) and batched stacked-basis
ranks (pairwise subspace distances), plus single-matrix RREF loops
(canonical bases). Run:

    python3 benchmarks/bench_kernels.py [--batch N] [--repeat R]

Works regardless of IDEALIFT_BACKEND: both implementations are imported
directly. If numba is unavailable only the numpy column is shown.
"""

import argparse
import time

import numpy as np

from idealift.kernels import HAS_NUMBA, _rank_many_numpy, _rref_numpy

if HAS_NUMBA:
    from idealift.kernels import _rank_many_numba, _rref_numba


def timed(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def bench_rank(batch, repeat, rng):
    rows = []
    for label, p, shape in [
        ("rank 2x2 mod 2", 2, (2, 2)),
        ("rank 2x2 mod 5", 5, (2, 2)),
        ("rank 4x4 mod 3 (stacked bases)", 3, (4, 4)),
        ("rank 4x8 mod 5", 5, (4, 8)),
    ]:
        mats = rng.integers(0, p, size=(batch, *shape)).astype(np.int64)
        t_np, out_np = timed(lambda: _rank_many_numpy(mats, p), repeat)
        if HAS_NUMBA:
            _rank_many_numba(mats[:2], p)  # warm the JIT outside the clock
            t_nb, out_nb = timed(lambda: _rank_many_numba(mats, p), repeat)
            assert np.array_equal(out_np, out_nb), "backends disagree"
            rows.append((label, t_np, t_nb))
        else:
            rows.append((label, t_np, None))
    return rows


def bench_rref(count, repeat, rng):
    mats = rng.integers(0, 3, size=(count, 4, 8)).astype(np.int64)

    def run(fn):
        total = 0
        for m in mats:
            _, r = fn(m, 3)
            total += r
        return total

    rows = []
    t_np, out_np = timed(lambda: run(_rref_numpy), repeat)
    if HAS_NUMBA:
        _rref_numba(mats[0].copy(), 3)
        t_nb, out_nb = timed(lambda: run(_rref_numba), repeat)
        assert out_np == out_nb, "backends disagree"
        rows.append((f"rref 4x8 mod 3, {count} single calls", t_np, t_nb))
    else:
        rows.append((f"rref 4x8 mod 3, {count} single calls", t_np, None))
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--batch", type=int, default=200_000, help="batch size for rank kernels")
    parser.add_argument("--rref-count", type=int, default=5_000, help="single RREF calls")
    parser.add_argument("--repeat", type=int, default=3, help="timing repetitions (best kept)")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    rows = bench_rank(args.batch, args.repeat, rng)
    rows += bench_rref(args.rref_count, args.repeat, rng)

    header = f"{'workload':<36} {'numpy':>10} {'numba':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for label, t_np, t_nb in rows:
        if t_nb is None:
            print(f"{label:<36} {t_np * 1e3:>8.1f}ms {'n/a':>10} {'n/a':>8}")
        else:
            print(
                f"{label:<36} {t_np * 1e3:>8.1f}ms {t_nb * 1e3:>8.1f}ms "
                f"{t_np / t_nb:>7.1f}x"
            )
    if not HAS_NUMBA:
        print("numba unavailable or disabled; numpy fallback only")


if __name__ == "__main__":
    main()
