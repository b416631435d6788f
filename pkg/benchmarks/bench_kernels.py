#!/usr/bin/env python3
"""Benchmark the compiled kernels against the numpy fallback.

Times the three hot paths on realistic workloads and prints a table:

  decode        majority-logic decoding of a batch of length-512 words
  greedy-step   one column-scoring pass of the greedy label search
  coverage      exhaustive pattern coverage of a mid-sized mask set

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import itertools
import time

import numpy as np

from rmstuck import _kernels_py
from rmstuck.masks import build_mask_set
from rmstuck.reed_muller import _decoder_tables, generator_matrix, rm_params

try:
    from rmstuck import _speedups
except ImportError:
    _speedups = None


def _decode_workload():
    r, m = 3, 9
    code = rm_params(r, m)
    vote_idx, coset_sizes, deg_offsets = _decoder_tables(r, m)
    gen = generator_matrix(r, m)
    rng = np.random.default_rng(0)
    words = rng.integers(0, 2, (2000, code.n), dtype=np.uint8)

    def run(impl):
        return impl.decode_batch(words, vote_idx, coset_sizes, deg_offsets, gen)

    return run


def _greedy_workload():
    mask_set = build_mask_set(4, 10)
    masks = mask_set.masks
    # refinement state after splitting on the first three columns
    ids = masks[:, 0] * 4 + masks[:, 1] * 2 + masks[:, 2]
    order = np.argsort(ids, kind="stable").astype(np.intp)
    sorted_ids = ids[order]
    boundaries = np.nonzero(np.diff(sorted_ids))[0] + 1
    starts = np.concatenate([[0], boundaries, [len(ids)]]).astype(np.intp)

    def run(impl):
        return impl.score_columns(masks, order, starts)

    return run


def _coverage_workload():
    mask_set = build_mask_set(3, 6)
    masks = mask_set.masks
    subsets = list(itertools.combinations(range(mask_set.n), 3))[:20000]

    def run(impl):
        worst = 0
        for subset in subsets:
            worst = max(worst, impl.missing_assignments(masks[:, subset]))
        return worst

    return run


def _time(fn, impl, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(impl)
        best = min(best, time.perf_counter() - start)
    return best, result


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    workloads = [
        ("decode RM(3,9) x2000", _decode_workload()),
        ("greedy-step M(4,10)", _greedy_workload()),
        ("coverage M(3,6) 20k subsets", _coverage_workload()),
    ]

    print(f"{'workload':<30} {'pure':>10} {'ext':>10} {'speedup':>8}")
    for name, fn in workloads:
        pure_t, pure_res = _time(fn, _kernels_py, args.repeat)
        if _speedups is None:
            print(f"{name:<30} {pure_t * 1e3:>8.1f}ms {'n/a':>10} {'-':>8}")
            continue
        ext_t, ext_res = _time(fn, _speedups, args.repeat)
        if isinstance(pure_res, np.ndarray):
            assert np.array_equal(pure_res, ext_res), name
        else:
            assert pure_res == ext_res, name
        print(f"{name:<30} {pure_t * 1e3:>8.1f}ms {ext_t * 1e3:>8.1f}ms {pure_t / ext_t:>7.1f}x")
    if _speedups is None:
        print("compiled extension not available; built pure-only timings")


if __name__ == "__main__":
    main()
