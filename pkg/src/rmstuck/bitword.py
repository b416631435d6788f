"""Binary words of length 2^m and stuck-cell side information.

A word is a plain numpy uint8 array of 0/1 values indexed by bit position
0..n-1.  Position 0 is the most significant position everywhere: in the
canonical (lexicographic) ordering of mask sets and in the hex text format,
whose first hex digit encodes positions 0-3.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ParameterError

BitWord = np.ndarray


def word_from_bits(bits) -> BitWord:
    """Build a word from an iterable of 0/1 values (also accepts a '0110' string)."""
    if isinstance(bits, str):
        bits = [int(c) for c in bits]
    word = np.asarray(list(bits), dtype=np.uint8)
    if word.ndim != 1 or not np.all(word <= 1):
        raise ParameterError("bits must be a flat sequence of 0/1 values")
    return word


def word_to_hex(word: BitWord) -> str:
    """Hex string of a word, one digit per 4 positions, position 0 in the top nibble."""
    n = len(word)
    padded = np.zeros(-(-n // 4) * 4, dtype=np.uint8)
    padded[:n] = word
    nibbles = padded.reshape(-1, 4) @ np.array([8, 4, 2, 1], dtype=np.uint8)
    return "".join("0123456789abcdef"[v] for v in nibbles)


def word_from_hex(text: str, n: int) -> BitWord:
    """Parse the hex format written by :func:`word_to_hex` back into an n-bit word."""
    text = text.strip().lower().removeprefix("0x")
    if len(text) != -(-n // 4):
        raise ParameterError(f"expected {-(-n // 4)} hex digits for a {n}-bit word, got {len(text)}")
    try:
        nibbles = [int(c, 16) for c in text]
    except ValueError as exc:
        raise ParameterError(f"invalid hex word {text!r}") from exc
    bits = ((np.array(nibbles, dtype=np.uint8)[:, None] >> np.array([3, 2, 1, 0])) & 1).ravel()
    if np.any(bits[n:]):
        raise ParameterError("nonzero padding bits in hex word")
    return bits[:n].astype(np.uint8)


def complement(word: BitWord) -> BitWord:
    return (1 - word).astype(np.uint8)


@dataclass(frozen=True)
class StuckPattern:
    """Side information for the encoder: (position, stuck value) pairs.

    Positions are pairwise distinct; values are 0 or 1.  The decoder never
    sees this object.
    """

    entries: tuple[tuple[int, int], ...]

    def __post_init__(self):
        entries = tuple((int(p), int(v)) for p, v in self.entries)
        positions = [p for p, _ in entries]
        if len(set(positions)) != len(positions):
            raise ParameterError("stuck positions must be pairwise distinct")
        if any(p < 0 for p in positions) or any(v not in (0, 1) for _, v in entries):
            raise ParameterError("stuck entries must be (position >= 0, value in {0,1})")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def parse(cls, specs) -> "StuckPattern":
        """Parse 'pos:val' strings, e.g. ['2:1', '5:1']."""
        entries = []
        for item in specs:
            pos, _, val = str(item).partition(":")
            if not val:
                raise ParameterError(f"stuck spec {item!r} is not of the form pos:val")
            entries.append((int(pos), int(val)))
        return cls(tuple(entries))

    @property
    def positions(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.entries)

    def __len__(self) -> int:
        return len(self.entries)


EMPTY_PATTERN = StuckPattern(())
