"""Vectorized enumeration of Pythagorean generator pairs."""
from typing import Callable, Tuple

import numpy as np


def param_grid(a_max: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    All valid (a, b) with 2 <= a <= a_max as two int64 arrays, in (a, b) order.
    """
    if a_max < 2:
        empty = np.zeros(0, dtype=np.int64)
        return empty, empty
    a, b = np.meshgrid(
        np.arange(1, a_max + 1, dtype=np.int64),
        np.arange(1, a_max + 1, dtype=np.int64),
        indexing="ij",
    )
    keep = (a > b) & ((a - b) % 2 == 1) & (np.gcd(a, b) == 1)
    return a[keep], b[keep]


def tally_values(
    bound: int,
    a_limit: Callable[[int], int],
    value_of: Callable[[np.ndarray, int], np.ndarray],
) -> np.ndarray:
    """
    Count, for every N < bound, the valid pairs (a, b) whose form value is N.

    `a_limit(b)` is the largest a whose value can stay below `bound` for that b.
    Every form handled here has a smallest value (at a = b + 1) that grows with
    b, so the scan stops at the first b with no admissible a.
    """
    chunks = []
    b = 1
    while True:
        hi = a_limit(b)
        if hi <= b:
            break
        a = np.arange(b + 1, hi + 1, dtype=np.int64)
        a = a[((a - b) % 2 == 1) & (np.gcd(a, b) == 1)]
        values = value_of(a, b)
        chunks.append(values[(values > 0) & (values < bound)])
        b += 1
    if not chunks:
        return np.zeros(bound, dtype=np.int64)
    return np.bincount(np.concatenate(chunks), minlength=bound).astype(np.int64)
