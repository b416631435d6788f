"""Recursive construction of defect-masking sets.

M(s, m) is a family of binary words of length 2^m such that for any s cell
positions and any target values there is a word in the family matching all of
them.  It is built by halving: a word covering constraints that all fall in
one half is duplicated ([w, w]); constraints split across halves are covered
by concatenating members of lower-multiplicity families ([w1, w2] with
multiplicities i and s-i).  The recursion bottoms out at the two constant
words (multiplicity 1) and at the family of all tuples once the word length
is too short to split further.

Mask sets are stored deduplicated in lexicographic order (position 0 most
significant), which makes files diffable and label lookups reproducible.
A built MaskSet is immutable and safe to share across threads.
"""

from __future__ import annotations

import bisect
import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from pathlib import Path

import numpy as np

from .bitword import BitWord, StuckPattern, word_from_hex, word_to_hex
from .errors import ParameterError


def _validate_sm(s: int, m: int) -> None:
    if s < 1:
        raise ParameterError(f"defect multiplicity must be >= 1, got s={s}")
    if m < 0:
        raise ParameterError(f"log-length must be >= 0, got m={m}")
    if (s - 1).bit_length() > m:
        raise ParameterError(f"need ceil(log2 s) <= m, got s={s}, m={m}")


def _all_tuples(n: int) -> np.ndarray:
    shifts = np.arange(n - 1, -1, -1, dtype=np.int64)
    return ((np.arange(1 << n, dtype=np.int64)[:, None] >> shifts) & 1).astype(np.uint8)


def _cross(left: np.ndarray, right: np.ndarray) -> np.ndarray:
    return np.hstack(
        [np.repeat(left, len(right), axis=0), np.tile(right, (len(left), 1))]
    )


@lru_cache(maxsize=None)
def _build(s: int, m: int) -> np.ndarray:
    n = 1 << m
    if s == 1:
        out = np.stack([np.zeros(n, dtype=np.uint8), np.ones(n, dtype=np.uint8)])
    elif m == (s - 1).bit_length():
        out = _all_tuples(n)
    else:
        same = _build(s, m - 1)
        parts = [np.hstack([same, same])]
        parts += [_cross(_build(i, m - 1), _build(s - i, m - 1)) for i in range(1, s)]
        out = np.unique(np.vstack(parts), axis=0)
    out.setflags(write=False)
    return out


@dataclass
class MaskSet:
    """Deduplicated mask family for multiplicity s and word length 2^m."""

    s: int
    m: int
    masks: np.ndarray  # (N, 2^m) uint8, lexicographically sorted, read-only
    _keys: list[bytes] | None = field(default=None, repr=False, compare=False)

    @property
    def count(self) -> int:
        return self.masks.shape[0]

    @property
    def n(self) -> int:
        return 1 << self.m

    @property
    def packed_keys(self) -> list[bytes]:
        """Rows packed to bytes, in the same (sorted) order as the mask matrix."""
        if self._keys is None:
            self._keys = [bytes(row) for row in np.packbits(self.masks, axis=1)]
        return self._keys


def build_mask_set(s: int, m: int) -> MaskSet:
    """Construct M(s, m).  Sub-results are memoized, so repeated builds are cheap."""
    _validate_sm(s, m)
    return MaskSet(s=s, m=m, masks=_build(s, m))


def mask_count(s: int, m: int) -> int:
    """Number of distinct masks in M(s, m)."""
    _validate_sm(s, m)
    return _build(s, m).shape[0]


def count_upper_bound(s: int, m: int) -> int:
    """2^s * m^(s-1), an upper bound on the size of M(s, m)."""
    if s < 1 or m < 1:
        raise ParameterError("bounds are defined for s >= 1, m >= 1")
    return (1 << s) * m ** (s - 1)


def count_lower_bound(s: int, m: int) -> int:
    """2 * sum of C(m, i) for i <= min(m, s-1): generator rows plus complements."""
    if s < 1 or m < 1:
        raise ParameterError("bounds are defined for s >= 1, m >= 1")
    return 2 * sum(comb(m, i) for i in range(min(m, s - 1) + 1))


def covers(mask: BitWord, pattern: StuckPattern) -> bool:
    """True iff the mask takes the required value at every constrained position."""
    mask = np.asarray(mask, dtype=np.uint8)
    if any(p >= len(mask) for p in pattern.positions):
        raise ParameterError("pattern position out of range")
    return all(int(mask[p]) == v for p, v in pattern.entries)


def _synth(m: int, entries: list[tuple[int, int]]) -> np.ndarray:
    count = len(entries)
    n = 1 << m
    if count == 1:
        return np.full(n, entries[0][1], dtype=np.uint8)
    if m == (count - 1).bit_length():
        out = np.zeros(n, dtype=np.uint8)
        for p, v in entries:
            out[p] = v
        return out
    half = n >> 1
    left = [(p, v) for p, v in entries if p < half]
    right = [(p - half, v) for p, v in entries if p >= half]
    if not right:
        w = _synth(m - 1, left)
        return np.concatenate([w, w])
    if not left:
        w = _synth(m - 1, right)
        return np.concatenate([w, w])
    return np.concatenate([_synth(m - 1, left), _synth(m - 1, right)])


def synthesize_mask(s: int, m: int, required: StuckPattern) -> BitWord:
    """Covering mask for the required values, produced without search.

    The result is always a member of M(s, m): with fewer than s constraints
    the recursion runs at the actual constraint count, which is a subfamily
    by the nesting property.  Unconstrained bits at the bottom level are 0,
    so the output is deterministic.
    """
    _validate_sm(s, m)
    if not isinstance(required, StuckPattern):
        required = StuckPattern(tuple(required))
    if len(required) > s:
        raise ParameterError(f"{len(required)} constraints exceed multiplicity s={s}")
    n = 1 << m
    if any(p >= n for p in required.positions):
        raise ParameterError("constraint position out of range")
    if len(required) == 0:
        return np.zeros(n, dtype=np.uint8)
    return _synth(m, list(required.entries))


def is_member(mask_set: MaskSet, word: BitWord) -> bool:
    """Binary search for a word in the canonical mask order."""
    word = np.asarray(word, dtype=np.uint8)
    if word.shape != (mask_set.n,):
        raise ParameterError(
            f"word length {word.shape} does not match 2^m={mask_set.n}"
        )
    keys = mask_set.packed_keys
    key = bytes(np.packbits(word))
    i = bisect.bisect_left(keys, key)
    return i < len(keys) and keys[i] == key


def save_mask_set(mask_set: MaskSet, path) -> None:
    """Write the text format: header line, then one hex-encoded mask per line."""
    lines = [f"maskset v1 s={mask_set.s} m={mask_set.m} count={mask_set.count}"]
    lines += [word_to_hex(row) for row in mask_set.masks]
    Path(path).write_text("\n".join(lines) + "\n")


def load_mask_set(path) -> MaskSet:
    """Read the text format back; validates the header, count and ordering."""
    lines = Path(path).read_text().splitlines()
    if not lines:
        raise ParameterError(f"{path}: empty mask-set file")
    head = lines[0].split()
    try:
        if head[0] != "maskset" or head[1] != "v1":
            raise ParameterError(f"{path}: not a maskset v1 file")
        fields = dict(item.split("=") for item in head[2:])
        s, m, count = int(fields["s"]), int(fields["m"]), int(fields["count"])
    except (IndexError, KeyError, ValueError) as exc:
        raise ParameterError(f"{path}: malformed maskset header") from exc
    body = [line.strip() for line in lines[1:] if line.strip()]
    if len(body) != count:
        raise ParameterError(f"{path}: header says {count} masks, found {len(body)}")
    masks = np.stack([word_from_hex(line, 1 << m) for line in body])
    keys = [bytes(row) for row in np.packbits(masks, axis=1)]
    if any(a >= b for a, b in itertools.pairwise(keys)):
        raise ParameterError(f"{path}: masks are not in canonical order")
    masks.setflags(write=False)
    return MaskSet(s=s, m=m, masks=masks)
