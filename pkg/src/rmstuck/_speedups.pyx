# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementations of the hot kernels.

Mirrors the contracts of ``_kernels_py``; see that module for the parameter
documentation.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def decode_batch(words, vote_idx, coset_sizes, deg_offsets, gen):
    cdef cnp.uint8_t[:, ::1] work = np.array(words, dtype=np.uint8, copy=True)
    cdef const cnp.int32_t[:, ::1] votes = np.ascontiguousarray(vote_idx, dtype=np.int32)
    cdef const cnp.int32_t[::1] csize = np.ascontiguousarray(coset_sizes, dtype=np.int32)
    cdef const cnp.int32_t[::1] offsets = np.ascontiguousarray(deg_offsets, dtype=np.int32)
    cdef const cnp.uint8_t[:, ::1] rows = np.ascontiguousarray(gen, dtype=np.uint8)

    cdef Py_ssize_t b_count = work.shape[0]
    cdef Py_ssize_t n = work.shape[1]
    cdef Py_ssize_t k = rows.shape[0]
    out = np.zeros((b_count, k), dtype=np.uint8)
    cdef cnp.uint8_t[:, ::1] coeffs = out

    cdef Py_ssize_t top = offsets.shape[0] - 2
    cdef Py_ssize_t degree, p, b, v, c, j, lo, hi, n_votes, size
    cdef int ones, acc
    for degree in range(top, -1, -1):
        lo = offsets[degree]
        hi = offsets[degree + 1]
        for b in range(b_count):
            for p in range(lo, hi):
                size = csize[p]
                n_votes = n / size
                ones = 0
                for v in range(n_votes):
                    acc = 0
                    for c in range(size):
                        acc ^= work[b, votes[p, v * size + c]]
                    ones += acc
                if 2 * ones > n_votes:
                    coeffs[b, p] = 1
            for p in range(lo, hi):
                if coeffs[b, p]:
                    for j in range(n):
                        work[b, j] ^= rows[p, j]
    return out


def score_columns(masks, order, starts):
    cdef const cnp.uint8_t[:, ::1] rows = np.ascontiguousarray(masks, dtype=np.uint8)
    cdef const cnp.intp_t[::1] perm = np.ascontiguousarray(order, dtype=np.intp)
    cdef const cnp.intp_t[::1] bounds = np.ascontiguousarray(starts, dtype=np.intp)

    cdef Py_ssize_t n = rows.shape[1]
    out = np.zeros(n, dtype=np.int64)
    cdef cnp.int64_t[::1] scores = out
    counts_arr = np.zeros(n, dtype=np.int64)
    cdef cnp.int64_t[::1] counts = counts_arr

    cdef Py_ssize_t n_buckets = bounds.shape[0] - 1
    cdef Py_ssize_t b, i, j, row
    cdef cnp.int64_t size
    for b in range(n_buckets):
        size = bounds[b + 1] - bounds[b]
        if size < 2:
            continue
        for j in range(n):
            counts[j] = 0
        for i in range(bounds[b], bounds[b + 1]):
            row = perm[i]
            for j in range(n):
                counts[j] += rows[row, j]
        for j in range(n):
            scores[j] += counts[j] * (size - counts[j])
    return out


def missing_assignments(sub):
    cdef const cnp.uint8_t[:, ::1] rows = np.ascontiguousarray(sub, dtype=np.uint8)
    cdef Py_ssize_t n_rows = rows.shape[0]
    cdef Py_ssize_t s = rows.shape[1]
    seen_arr = np.zeros(1 << s, dtype=np.uint8)
    cdef cnp.uint8_t[::1] seen = seen_arr
    cdef Py_ssize_t i, j
    cdef long val
    for i in range(n_rows):
        val = 0
        for j in range(s):
            val = (val << 1) | rows[i, j]
        seen[val] = 1
    cdef long missing = 0
    for val in range(1 << s):
        if not seen[val]:
            missing += 1
    return int(missing)
