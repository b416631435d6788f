"""Plain (P1) portable-bitmap output for visualizing binary matrices."""

from __future__ import annotations

from pathlib import Path

import numpy as np


def write_pbm(path, bits) -> None:
    """Write a 2D 0/1 array as an ASCII PBM; 1 renders black."""
    arr = np.atleast_2d(np.asarray(bits, dtype=np.uint8))
    height, width = arr.shape
    with Path(path).open("w") as handle:
        handle.write(f"P1\n{width} {height}\n")
        for row in arr:
            handle.write(" ".join("1" if b else "0" for b in row) + "\n")
