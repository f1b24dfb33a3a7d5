"""Dense GF(2) linear algebra on `numpy.uint8` matrices."""
from typing import List, Tuple

import numpy as np


__all__ = [
    "gf2RowEchelon",
    "gf2Rank",
    "gf2InRowSpan",
]


def gf2RowEchelon(matrix: np.ndarray) -> Tuple[np.ndarray, List[int]]:
    """Row-reduce a binary matrix over GF(2) by XOR elimination.

    Args:
        matrix (np.ndarray): [m, n] matrix with entries in {0, 1}.

    Returns:
        np.ndarray: Reduced row-echelon form, [m, n], uint8.
        List[int]: Pivot columns, one per nonzero row.
    """
    reduced = (np.asarray(matrix, dtype=np.uint8) % 2).copy()
    if reduced.ndim != 2:
        raise ValueError(f"Expected a 2-d matrix, got shape {reduced.shape}.")
    m, n = reduced.shape
    pivots = list()
    row = 0
    for col in range(n):
        if row >= m:
            break
        candidates = np.nonzero(reduced[row:, col])[0]
        if len(candidates) < 1:
            continue
        found = row + int(candidates[0])
        if found != row:
            reduced[[row, found]] = reduced[[found, row]]
        # clear the pivot column everywhere else
        hits = np.nonzero(reduced[:, col])[0]
        for other in hits:
            if other != row:
                reduced[other] ^= reduced[row]
        pivots.append(col)
        row += 1
    return reduced, pivots


def gf2Rank(matrix: np.ndarray) -> int:
    if np.asarray(matrix).size == 0:
        return 0
    return len(gf2RowEchelon(matrix)[1])


def gf2InRowSpan(rows: np.ndarray, vector: np.ndarray) -> bool:
    """Whether `vector` is a GF(2) combination of `rows`.

    Args:
        rows (np.ndarray): [k, n] spanning rows. `k` may be 0.
        vector (np.ndarray): [n] target.
    """
    vector = np.asarray(vector, dtype=np.uint8) % 2
    if not vector.any():
        return True
    rows = np.asarray(rows, dtype=np.uint8).reshape(-1, len(vector))
    if len(rows) < 1:
        return False
    return gf2Rank(np.vstack([rows, vector[None]])) == gf2Rank(rows)
