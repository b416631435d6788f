"""End-to-end joint encoder and decoder.

Encoding: place zeros at the label positions of the information set, fill the
remaining information positions with user data, encode systematically, then
add a covering mask so the written word matches every stuck cell.  Because
the message is zero at label positions and systematic encoding reproduces
information bits verbatim, the written word carries the mask's label bits
unchanged, which is all the decoder needs to undo the mask.

A CodecConfig is immutable after construction; encode/decode are pure and
safe to call concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bitword import EMPTY_PATTERN, BitWord, StuckPattern
from .errors import CapacityError, DecodeFailure, ParameterError
from .labeling import Label, greedy_label, label_s2, make_label
from .masks import MaskSet, _validate_sm, build_mask_set, synthesize_mask
from .reed_muller import (
    RmCode,
    choose_information_set,
    decode_words,
    rm_params,
    systematic_encode,
)


@dataclass
class CodecConfig:
    """Wiring of one joint code: RM(r, m) against s stuck cells.

    k_user = k - L bits of user data per word; total redundancy is the random
    part (n - k) plus the label size L.
    """

    code: RmCode
    s: int
    mask_set: MaskSet
    label: Label
    info_set: tuple[int, ...]
    k_user: int
    data_positions: tuple[int, ...]  # information positions carrying user bits
    data_slots: tuple[int, ...]  # their indices within the ordered info set

    @property
    def n(self) -> int:
        return self.code.n

    @property
    def redundancy(self) -> int:
        return (self.code.n - self.code.k) + self.label.size


def new_codec(r: int, m: int, s: int, label_positions=None) -> CodecConfig:
    """Build the full configuration: mask set, label, information set.

    Masks of multiplicity s live in RM(r, m) only for r >= s-1, so that is a
    hard precondition.  When no label is given, the exact construction is
    used for s=2 and greedy search otherwise.  Label columns are always
    checked for linear independence in the generator matrix (for sizes below
    the dual distance 2^(r+1) this cannot fail).
    """
    _validate_sm(s, m)
    if not s - 1 <= r <= m:
        raise ParameterError(f"need s-1 <= r <= m, got r={r}, s={s}, m={m}")
    code = rm_params(r, m)
    mask_set = build_mask_set(s, m)
    if label_positions is None:
        label = label_s2(m) if s == 2 else greedy_label(mask_set)
    else:
        label = make_label(mask_set, label_positions)
    info_set = choose_information_set(code, label.positions)
    label_set = set(label.positions)
    data_positions = tuple(p for p in info_set if p not in label_set)
    data_slots = tuple(i for i, p in enumerate(info_set) if p not in label_set)
    return CodecConfig(
        code=code,
        s=s,
        mask_set=mask_set,
        label=label,
        info_set=info_set,
        k_user=code.k - label.size,
        data_positions=data_positions,
        data_slots=data_slots,
    )


def encode(cfg: CodecConfig, u, stuck: StuckPattern = EMPTY_PATTERN) -> BitWord:
    """Encode user bits into a codeword matching every stuck value.

    The result c satisfies: c is in RM(r, m); c agrees with the stuck values;
    c restricted to the label positions identifies the mask that was added.
    """
    data = np.asarray(u, dtype=np.uint8)
    if data.shape != (cfg.k_user,):
        raise ParameterError(f"user data length {data.shape} does not match k_user={cfg.k_user}")
    if not isinstance(stuck, StuckPattern):
        stuck = StuckPattern(tuple(stuck))
    if len(stuck) > cfg.s:
        raise CapacityError(f"{len(stuck)} stuck cells exceed the multiplicity s={cfg.s}")
    if any(p >= cfg.n for p in stuck.positions):
        raise ParameterError("stuck position out of range")
    message = np.zeros(cfg.code.k, dtype=np.uint8)
    message[list(cfg.data_slots)] = data
    base = systematic_encode(message, cfg.code, cfg.info_set)
    required = StuckPattern(tuple((p, v ^ int(base[p])) for p, v in stuck.entries))
    mask = synthesize_mask(cfg.s, cfg.code.m, required)
    return base ^ mask


def decode_many(cfg: CodecConfig, reads) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Batch decode; returns (messages, corrected, label_known).

    messages[i] is valid only where both flags hold; rows with a failed
    random-error correction or an unknown label are zeroed.
    """
    arr = np.atleast_2d(np.asarray(reads, dtype=np.uint8))
    codewords, corrected = decode_words(arr, cfg.code)
    weights = 1 << np.arange(cfg.label.size - 1, -1, -1, dtype=np.int64)
    keys = codewords[:, list(cfg.label.positions)].astype(np.int64) @ weights
    lookup = cfg.label.lookup
    mask_idx = np.zeros(len(arr), dtype=np.intp)
    label_known = np.zeros(len(arr), dtype=bool)
    for i, key in enumerate(keys):
        idx = lookup.get(int(key))
        if idx is not None:
            mask_idx[i] = idx
            label_known[i] = True
    base = codewords ^ cfg.mask_set.masks[mask_idx]
    messages = base[:, list(cfg.data_positions)]
    valid = corrected & label_known
    messages[~valid] = 0
    return messages, corrected, label_known


def decode(cfg: CodecConfig, read: BitWord) -> np.ndarray:
    """Recover the user bits from a read word (label lookup plus mask removal)."""
    word = np.asarray(read, dtype=np.uint8)
    if word.shape != (cfg.n,):
        raise ParameterError(f"read length {word.shape} does not match n={cfg.n}")
    messages, corrected, label_known = decode_many(cfg, word[None, :])
    if not corrected[0]:
        raise DecodeFailure("read word is beyond the random-error correction radius")
    if not label_known[0]:
        raise DecodeFailure("decoded label bits match no mask in the set")
    return messages[0]
