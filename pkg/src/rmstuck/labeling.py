"""Label selection: bit positions that uniquely identify each mask in a set.

A label is a set of L column positions whose restriction is injective on the
mask set; those L bits are the stuck-at redundancy the decoder reads back.
For multiplicity 2 an exact construction exists; for anything else a greedy
distinguishing-column search is used.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial, prod
from pathlib import Path

import numpy as np

from . import kernels
from .errors import LabelError, ParameterError
from .masks import MaskSet, build_mask_set


def _ceil_log2(x: int) -> int:
    if x < 1:
        raise ParameterError(f"ceil(log2) needs a positive argument, got {x}")
    return (x - 1).bit_length()


@dataclass
class Label:
    """Sorted label positions plus the restriction-value -> mask-index table.

    Two labels are the same label iff they are equal as position sets; the
    lookup keys pack the restricted bits with the lowest position as the most
    significant bit.  Immutable after construction.
    """

    positions: tuple[int, ...]
    lookup: dict[int, int] = field(repr=False)

    @property
    def size(self) -> int:
        return len(self.positions)

    def key_of(self, word) -> int:
        """Pack the label bits of a word into a lookup key."""
        bits = np.asarray(word, dtype=np.uint8)[list(self.positions)]
        return int(bits @ (1 << np.arange(self.size - 1, -1, -1, dtype=np.int64)))


def restriction_keys(mask_set: MaskSet, positions) -> list[bytes]:
    """Restrictions of every mask to the given positions, packed for comparison."""
    sub = np.ascontiguousarray(mask_set.masks[:, list(positions)])
    return [bytes(row) for row in sub]


def validate_label(mask_set: MaskSet, positions) -> bool:
    """True iff the restrictions of all masks to these positions are pairwise distinct."""
    positions = [int(p) for p in positions]
    if len(set(positions)) != len(positions):
        raise ParameterError("label positions must be distinct")
    if any(not 0 <= p < mask_set.n for p in positions):
        raise ParameterError("label position out of range")
    keys = restriction_keys(mask_set, positions)
    return len(set(keys)) == mask_set.count


def make_label(mask_set: MaskSet, positions) -> Label:
    """Validated label over a mask set; raises LabelError if not injective."""
    positions = tuple(sorted(int(p) for p in positions))
    if not validate_label(mask_set, positions):
        raise LabelError(
            f"{len(positions)} positions do not uniquely identify the {mask_set.count} masks"
        )
    if len(positions) >= 63:
        raise LabelError("labels longer than 62 bits are not supported")
    weights = 1 << np.arange(len(positions) - 1, -1, -1, dtype=np.int64)
    keys = mask_set.masks[:, list(positions)].astype(np.int64) @ weights
    return Label(positions=positions, lookup={int(key): i for i, key in enumerate(keys)})


def label_s2(m: int) -> Label:
    """Exact label for the two-defect mask set of length 2^m.

    Mask row k of the nontrivial top half is assigned the L-bit binary string
    of k; reading those strings column-wise yields the bit positions.  The
    size is exactly 1 + ceil(log2(m+1)).
    """
    if m < 1:
        raise ParameterError(f"need m >= 1, got m={m}")
    size = 1 + m.bit_length()
    positions = []
    for j in range(size):
        col = 0
        for k in range(1, m + 1):
            col |= ((k >> (size - 1 - j)) & 1) << (m - k)
        positions.append(col)
    return make_label(build_mask_set(2, m), positions)


def count_labels_s2(m: int) -> int:
    """Number of distinct label position-sets the exact construction can produce."""
    if m < 1:
        raise ParameterError(f"need m >= 1, got m={m}")
    size = 1 + m.bit_length()
    return prod((1 << size) - 2 * i for i in range(1, m + 1)) // factorial(size)


def greedy_label(mask_set: MaskSet) -> Label:
    """Greedy distinguishing-column search.

    Repeatedly picks the column separating the most not-yet-distinguished
    mask pairs (lowest index on ties) and refines the partition of masks by
    their restriction so far, until every mask is alone in its class.  The
    result is deterministic and its size is within the pairwise-elimination
    upper bound.
    """
    total = mask_set.count
    if total < 2:
        raise ParameterError("greedy labeling needs at least two masks")
    masks = mask_set.masks
    rows = np.arange(total, dtype=np.intp)
    ids = np.zeros(total, dtype=np.int64)
    positions: list[int] = []
    while len(rows):
        order_local = np.argsort(ids, kind="stable")
        order = rows[order_local]
        sorted_ids = ids[order_local]
        boundaries = np.nonzero(np.diff(sorted_ids))[0] + 1
        starts = np.concatenate([[0], boundaries, [len(rows)]]).astype(np.intp)
        scores = kernels.score_columns(masks, order, starts)
        best = int(np.argmax(scores))
        positions.append(best)
        ids = ids * 2 + masks[rows, best]
        _, inverse, counts = np.unique(ids, return_inverse=True, return_counts=True)
        keep = counts[inverse] > 1
        rows = rows[keep]
        ids = inverse[keep].astype(np.int64)
    assert len(positions) <= label_upper_bound(mask_set.s, total)
    return make_label(mask_set, positions)


def label_lower_bound(s: int, m: int, literal: bool = False) -> int:
    """Lower bound on the minimum label size for M(s, m).

    The default terminates the halving chain at the exact two-defect label
    size 1 + ceil(log2((m-s+2)+1)); ``literal=True`` returns the coarser
    2^(s-2) * (1 + ceil(log2(m-s+2))) variant instead.
    """
    if not 2 <= s <= m:
        raise ParameterError(f"bound is defined for 2 <= s <= m, got s={s}, m={m}")
    tail = m - s + 2
    if literal:
        return (1 << (s - 2)) * (1 + _ceil_log2(tail))
    return (1 << (s - 2)) * (1 + _ceil_log2(tail + 1))


def label_upper_bound(s: int, n_masks: int) -> int:
    """Pairwise-elimination upper bound 2^s * (2*ceil(log2 N) - 1) on the label size."""
    if n_masks < 2:
        raise ParameterError(f"need at least two masks, got {n_masks}")
    return (1 << s) * (2 * _ceil_log2(n_masks) - 1)


def label_upper_bound_coarse(s: int, m: int) -> int:
    """Mask-count-free variant 2^(s+1) * ((s-1)*(1 + ceil(log2 m)) - 1)."""
    if s < 2 or m < 1:
        raise ParameterError(f"bound is defined for s >= 2, m >= 1, got s={s}, m={m}")
    return (1 << (s + 1)) * ((s - 1) * (1 + _ceil_log2(m)) - 1)


def save_label(label: Label, s: int, m: int, path) -> None:
    """Write the text format: header line, then the positions on one line."""
    text = f"label v1 s={s} m={m} L={label.size}\n"
    text += " ".join(str(p) for p in label.positions) + "\n"
    Path(path).write_text(text)


def load_label_positions(path) -> tuple[int, int, tuple[int, ...]]:
    """Read the text format; returns (s, m, positions).  Validation is the caller's job."""
    lines = Path(path).read_text().splitlines()
    if not lines:
        raise ParameterError(f"{path}: empty label file")
    head = lines[0].split()
    try:
        if head[0] != "label" or head[1] != "v1":
            raise ParameterError(f"{path}: not a label v1 file")
        fields = dict(item.split("=") for item in head[2:])
        s, m, size = int(fields["s"]), int(fields["m"]), int(fields["L"])
    except (IndexError, KeyError, ValueError) as exc:
        raise ParameterError(f"{path}: malformed label header") from exc
    if len(lines) < 2:
        raise ParameterError(f"{path}: missing positions line")
    positions = tuple(int(tok) for tok in lines[1].split())
    if len(positions) != size:
        raise ParameterError(f"{path}: header says L={size}, found {len(positions)} positions")
    return s, m, positions
