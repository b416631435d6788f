"""Reed-Muller codes over GF(2): parameters, generators, encoding, decoding.

Conventions shared by the whole package: RM(r, m) has length n = 2^m and its
codewords are the evaluation vectors of multilinear polynomials of degree at
most r in m variables.  Column j of every matrix is the evaluation point with
binary representation j, and variable i reads bit i of the column index.
Generator rows are monomial evaluation vectors ordered by degree, then
lexicographically by variable index set.

Everything here is pure and the cached matrices are immutable, so concurrent
readers are safe.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import kernels
from .bitword import BitWord
from .errors import InfeasibleLabelError, ParameterError


@dataclass(frozen=True)
class RmCode:
    """Parameters of RM(r, m); t is the guaranteed random-error correction radius."""

    r: int
    m: int
    n: int
    k: int
    d: int
    t: int


def rm_params(r: int, m: int) -> RmCode:
    """Code parameters for RM(r, m): n = 2^m, k = sum of C(m, i) for i <= r, d = 2^(m-r)."""
    if not 0 <= r <= m:
        raise ParameterError(f"need 0 <= r <= m, got r={r}, m={m}")
    n = 1 << m
    k = sum(math.comb(m, i) for i in range(r + 1))
    d = 1 << (m - r)
    return RmCode(r=r, m=m, n=n, k=k, d=d, t=(d - 1) // 2)


@lru_cache(maxsize=None)
def _monomials(r: int, m: int) -> tuple[tuple[int, ...], ...]:
    return tuple(
        subset for deg in range(r + 1) for subset in itertools.combinations(range(m), deg)
    )


@lru_cache(maxsize=None)
def generator_matrix(r: int, m: int) -> np.ndarray:
    """k x n monomial-evaluation generator matrix of RM(r, m), read-only."""
    code = rm_params(r, m)
    cols = np.arange(code.n, dtype=np.int64)
    rows = np.ones((code.k, code.n), dtype=np.uint8)
    for idx, subset in enumerate(_monomials(r, m)):
        for var in subset:
            rows[idx] &= ((cols >> var) & 1).astype(np.uint8)
    rows.setflags(write=False)
    return rows


def anf_transform(words) -> np.ndarray:
    """Batch binary Moebius transform: evaluation vectors to ANF coefficient vectors.

    Row u of the result is the coefficient of the monomial whose variable set
    is the set bits of u; the transform is an involution.
    """
    arr = np.array(np.atleast_2d(words), dtype=np.uint8, copy=True)
    n = arr.shape[1]
    if n == 0 or n & (n - 1):
        raise ParameterError(f"word length must be a power of two, got {n}")
    idx = np.arange(n)
    half = 1
    while half < n:
        upper = np.nonzero(idx & half)[0]
        arr[:, upper] ^= arr[:, upper ^ half]
        half <<= 1
    return arr


def anf_degrees(words) -> np.ndarray:
    """Algebraic degrees of a batch of words; the all-zero word maps to -1."""
    coeffs = anf_transform(words)
    n = coeffs.shape[1]
    popcounts = np.array([u.bit_count() for u in range(n)], dtype=np.int64)
    degrees = (coeffs * popcounts[None, :]).max(axis=1)
    return np.where(coeffs.any(axis=1), degrees, -1)


def anf_degree(word: BitWord) -> int:
    """Degree of the unique multilinear polynomial evaluating to word (-1 for zero)."""
    return int(anf_degrees(np.atleast_2d(word))[0])


def is_codeword(word: BitWord, code: RmCode) -> bool:
    """Membership test via the algebraic degree."""
    word = np.asarray(word, dtype=np.uint8)
    if word.shape != (code.n,):
        raise ParameterError(f"word length {word.shape} does not match n={code.n}")
    return anf_degree(word) <= code.r


def _pack_row(bits: np.ndarray) -> int:
    return int.from_bytes(np.packbits(bits).tobytes(), "big")


def _reduce(value: int, basis: list[int]) -> int:
    for b in basis:
        value = min(value, value ^ b)
    return value


def rank(mat) -> int:
    """GF(2) row rank."""
    rows = np.atleast_2d(np.asarray(mat, dtype=np.uint8))
    basis: list[int] = []
    for row in rows:
        v = _reduce(_pack_row(row), basis)
        if v:
            basis.append(v)
    return len(basis)


def choose_information_set(code: RmCode, required_positions=()) -> tuple[int, ...]:
    """k column positions with independent generator columns, containing the required ones.

    The required columns are checked first (InfeasibleLabelError if dependent),
    then the set is extended greedily in increasing column index.
    """
    required = sorted({int(p) for p in required_positions})
    if required and not (0 <= required[0] and required[-1] < code.n):
        raise ParameterError("required positions out of range")
    if len(required) > code.k:
        raise ParameterError(f"{len(required)} required positions exceed k={code.k}")
    gen = generator_matrix(code.r, code.m)
    col_ints = [_pack_row(gen[:, j]) for j in range(code.n)]

    basis: list[int] = []
    chosen: list[int] = []

    def try_add(j: int) -> bool:
        v = _reduce(col_ints[j], basis)
        if v:
            basis.append(v)
            chosen.append(j)
            return True
        return False

    for p in required:
        if not try_add(p):
            raise InfeasibleLabelError(
                f"generator columns {required} of RM({code.r},{code.m}) are linearly dependent"
            )
    required_set = set(required)
    for j in range(code.n):
        if len(chosen) == code.k:
            break
        if j in required_set:
            continue
        try_add(j)
    return tuple(sorted(chosen))


@lru_cache(maxsize=None)
def _systematic_matrix(r: int, m: int, info_set: tuple[int, ...]) -> np.ndarray:
    """k x n encoding matrix E with E[:, info_set] = I over GF(2)."""
    code = rm_params(r, m)
    if len(info_set) != code.k or len(set(info_set)) != code.k:
        raise ParameterError(f"information set must hold {code.k} distinct positions")
    if any(not 0 <= p < code.n for p in info_set):
        raise ParameterError("information set positions out of range")
    gen = generator_matrix(r, m)
    if code.k == code.n:
        eye = np.eye(code.n, dtype=np.uint8)
        eye.setflags(write=False)
        return eye
    aug = np.concatenate([gen[:, info_set], gen], axis=1).astype(np.uint8)
    for col in range(code.k):
        pivots = np.nonzero(aug[col:, col])[0]
        if len(pivots) == 0:
            raise ParameterError("information set columns are linearly dependent")
        piv = col + int(pivots[0])
        if piv != col:
            aug[[col, piv]] = aug[[piv, col]]
        flip = np.nonzero(aug[:, col])[0]
        flip = flip[flip != col]
        aug[flip] ^= aug[col]
    out = aug[:, code.k :]
    out.setflags(write=False)
    return out


def systematic_encode(message, code: RmCode, info_set) -> BitWord:
    """The unique RM(r, m) codeword equal to message on info_set (increasing order)."""
    info = tuple(sorted(int(p) for p in info_set))
    msg = np.asarray(message, dtype=np.uint8)
    if msg.shape != (code.k,):
        raise ParameterError(f"message length {msg.shape} does not match k={code.k}")
    enc = _systematic_matrix(code.r, code.m, info)
    return ((msg.astype(np.int64) @ enc) & 1).astype(np.uint8)


@lru_cache(maxsize=None)
def _decoder_tables(r: int, m: int):
    """Vote index tables for majority-logic decoding, one row per generator row."""
    code = rm_params(r, m)
    monos = _monomials(r, m)
    vote_idx = np.empty((code.k, code.n), dtype=np.int32)
    coset_sizes = np.empty(code.k, dtype=np.int32)
    for p, subset in enumerate(monos):
        inside = list(subset)
        outside = [v for v in range(m) if v not in subset]
        a = np.arange(1 << len(outside), dtype=np.int32)
        bases = np.zeros_like(a)
        for bit, var in enumerate(outside):
            bases |= ((a >> bit) & 1) << var
        b = np.arange(1 << len(inside), dtype=np.int32)
        inner = np.zeros_like(b)
        for bit, var in enumerate(inside):
            inner |= ((b >> bit) & 1) << var
        vote_idx[p] = (bases[:, None] | inner[None, :]).ravel()
        coset_sizes[p] = 1 << len(inside)
    deg_offsets = np.zeros(r + 2, dtype=np.int32)
    for deg in range(r + 1):
        deg_offsets[deg + 1] = deg_offsets[deg] + math.comb(m, deg)
    for arr in (vote_idx, coset_sizes, deg_offsets):
        arr.setflags(write=False)
    return vote_idx, coset_sizes, deg_offsets


def decode_words(words, code: RmCode) -> tuple[np.ndarray, np.ndarray]:
    """Batch bounded-distance decode.

    Returns (codewords, ok): ok[i] is True iff words[i] lies within Hamming
    distance t of codewords[i].  Majority-logic voting guarantees this holds
    whenever a codeword within radius t exists.
    """
    arr = np.atleast_2d(np.asarray(words, dtype=np.uint8))
    if arr.shape[1] != code.n:
        raise ParameterError(f"word length {arr.shape[1]} does not match n={code.n}")
    if code.r == code.m:
        return arr.copy(), np.ones(arr.shape[0], dtype=bool)
    vote_idx, coset_sizes, deg_offsets = _decoder_tables(code.r, code.m)
    gen = generator_matrix(code.r, code.m)
    coeffs = kernels.decode_batch(arr, vote_idx, coset_sizes, deg_offsets, gen)
    codewords = ((coeffs.astype(np.int64) @ gen) & 1).astype(np.uint8)
    dist = (codewords != arr).sum(axis=1)
    return codewords, dist <= code.t


def decode(word: BitWord, code: RmCode) -> tuple[BitWord, bool]:
    """Majority-logic decode of a single word; ok=False beyond the guaranteed radius.

    The output is rechecked (code membership and distance at most t) so a
    vote gone wrong beyond the radius is reported as a failure rather than
    returned as a phantom correction.
    """
    codewords, ok = decode_words(np.atleast_2d(word), code)
    out = codewords[0]
    return out, bool(ok[0]) and is_codeword(out, code)
