"""Pure numpy implementations of the hot kernels.

Same contracts as the compiled backend in ``_speedups.pyx``; selected by
:mod:`rmstuck.kernels` when the extension is unavailable or disabled.
"""

from __future__ import annotations

import numpy as np

# cap on the transient (buckets x size x n) block used by score_columns
_BLOCK_BYTES = 1 << 26


def decode_batch(words, vote_idx, coset_sizes, deg_offsets, gen):
    """Majority-logic decode a batch of words.

    words       : (B, n) uint8, received words (not modified)
    vote_idx    : (k, n) int32, row p lists positions grouped in cosets of
                  coset_sizes[p] consecutive entries
    coset_sizes : (k,) int32
    deg_offsets : (r+2,) int32, generator rows of degree d are
                  [deg_offsets[d], deg_offsets[d+1])
    gen         : (k, n) uint8 generator matrix, rows ordered by degree

    Returns (B, k) uint8 coefficient estimates (ties vote 0).
    """
    work = np.array(words, dtype=np.uint8, copy=True)
    b_count = work.shape[0]
    k = gen.shape[0]
    coeffs = np.zeros((b_count, k), dtype=np.uint8)
    top = len(deg_offsets) - 2
    for degree in range(top, -1, -1):
        lo, hi = int(deg_offsets[degree]), int(deg_offsets[degree + 1])
        for p in range(lo, hi):
            csize = int(coset_sizes[p])
            cosets = np.asarray(vote_idx[p]).reshape(-1, csize)
            votes = work[:, cosets].sum(axis=2, dtype=np.int64) & 1
            ones = votes.sum(axis=1)
            coeffs[:, p] = (2 * ones > votes.shape[1]).astype(np.uint8)
        if hi > lo:
            level = coeffs[:, lo:hi].astype(np.int32) @ gen[lo:hi].astype(np.int32)
            work ^= (level & 1).astype(np.uint8)
    return coeffs


def score_columns(masks, order, starts):
    """Per-column count of mask pairs split by that column.

    masks  : (N, n) uint8
    order  : (A,) intp row indices grouped by refinement bucket
    starts : (B+1,) intp bucket boundaries within order

    Returns (n,) int64: for each column, the number of pairs of rows that lie
    in the same bucket but differ in that column.
    """
    masks = np.asarray(masks, dtype=np.uint8)
    order = np.asarray(order, dtype=np.intp)
    starts = np.asarray(starts, dtype=np.intp)
    n = masks.shape[1]
    scores = np.zeros(n, dtype=np.int64)
    sizes = np.diff(starts)
    for size in np.unique(sizes):
        size = int(size)
        sel = np.nonzero(sizes == size)[0]
        step = max(1, _BLOCK_BYTES // max(1, size * n))
        for i in range(0, len(sel), step):
            chunk = sel[i : i + step]
            rows = order[starts[chunk][:, None] + np.arange(size)]
            cnt = masks[rows].sum(axis=1, dtype=np.int64)
            scores += (cnt * (size - cnt)).sum(axis=0)
    return scores


def missing_assignments(sub):
    """Number of value assignments over the given columns matched by no row.

    sub : (N, s) uint8, mask set restricted to the s inspected positions.
    Returns an int in [0, 2^s]; 0 means every assignment is covered.
    """
    sub = np.asarray(sub, dtype=np.uint8)
    s = sub.shape[1]
    weights = (np.int64(1) << np.arange(s - 1, -1, -1)).astype(np.int64)
    vals = sub.astype(np.int64) @ weights
    return int((1 << s) - np.unique(vals).size)
