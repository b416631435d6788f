"""Independent brute-force oracles.

These deliberately avoid the code paths they are used to check: coverage is
confirmed by a per-pattern linear scan over the mask rows, decoding by an
exhaustive nearest-codeword search, and algebraic degrees by rowspan
membership tests against generator matrices.
"""

from __future__ import annotations

import itertools

import numpy as np

from rmstuck import generator_matrix, rank, rm_params

_POPCOUNT = np.array([bin(i).count("1") for i in range(256)], dtype=np.int64)


def all_words(n: int) -> np.ndarray:
    """All 2^n binary words, one per row (row index i is word i, LSB at position n-1)."""
    shifts = np.arange(n - 1, -1, -1)
    return ((np.arange(1 << n, dtype=np.int64)[:, None] >> shifts) & 1).astype(np.uint8)


def codebook(r: int, m: int) -> np.ndarray:
    """All codewords of RM(r, m) by enumerating messages against the generator."""
    code = rm_params(r, m)
    messages = all_words(code.k)
    return ((messages.astype(np.int64) @ generator_matrix(r, m)) & 1).astype(np.uint8)


def nearest_codewords(words: np.ndarray, book: np.ndarray, chunk: int = 2048):
    """Minimum distance and argmin codeword index for each word, via packed popcounts."""
    packed_words = np.packbits(words, axis=1)
    packed_book = np.packbits(book, axis=1)
    best_dist = np.empty(len(words), dtype=np.int64)
    best_idx = np.empty(len(words), dtype=np.int64)
    for lo in range(0, len(words), chunk):
        hi = min(lo + chunk, len(words))
        xored = packed_words[lo:hi, None, :] ^ packed_book[None, :, :]
        dists = _POPCOUNT[xored].sum(axis=2)
        best_dist[lo:hi] = dists.min(axis=1)
        best_idx[lo:hi] = dists.argmin(axis=1)
    return best_dist, best_idx


def scan_covers(masks: np.ndarray, positions, values) -> bool:
    """Linear scan: does any mask row match all the required values?"""
    for row in masks:
        if all(int(row[p]) == int(v) for p, v in zip(positions, values)):
            return True
    return False


def coverage_by_scan(masks: np.ndarray, s: int, m: int) -> bool:
    """Exhaustive coverage check by per-pattern linear scan."""
    for positions in itertools.combinations(range(1 << m), s):
        for values in itertools.product((0, 1), repeat=s):
            if not scan_covers(masks, positions, values):
                return False
    return True


def anf_degree_by_rowspan(word: np.ndarray) -> int:
    """Degree as the smallest r with word in the rowspan of the order-r generator."""
    word = np.asarray(word, dtype=np.uint8)
    if not word.any():
        return -1
    m = (len(word) - 1).bit_length()
    for r in range(m + 1):
        gen = generator_matrix(r, m)
        if rank(np.vstack([gen, word[None, :]])) == rank(gen):
            return r
    raise AssertionError("unreachable: every word has degree <= m")


def valid_position_sets(mask_set, size: int) -> list[tuple[int, ...]]:
    """All position sets of the given size whose restriction is injective."""
    from rmstuck import validate_label

    return [
        combo
        for combo in itertools.combinations(range(mask_set.n), size)
        if validate_label(mask_set, combo)
    ]
