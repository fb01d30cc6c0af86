"""Brute-force ground truth for strict and non-strict saddlepoints.

These scan the whole matrix with raw-value semantics (no lexicographic
tie-breaking) and serve as the reference the randomized solver is tested
against. A strict saddlepoint is the strict maximum of its row and strict
minimum of its column (at most one exists); a non-strict saddlepoint only
needs equality with its row maximum and column minimum, and all qualifying
cells share one value.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass
class OracleResult:
    kind: str  # "strict" | "nonstrict"
    cells: list  # [(row, col, value), ...] empty if none

    @property
    def found(self) -> bool:
        return bool(self.cells)

    @property
    def value(self):
        return self.cells[0][2] if self.cells else None


def _as_array(matrix) -> np.ndarray:
    if isinstance(matrix, np.ndarray):
        return matrix
    return matrix.to_array()


def brute_strict(matrix) -> OracleResult:
    """O(m*n) scan for the unique strictly-dominant cell, if any."""
    a = _as_array(matrix)
    row_max = a.max(axis=1)
    col_min = a.min(axis=0)
    row_max_count = (a == row_max[:, None]).sum(axis=1)
    col_min_count = (a == col_min[None, :]).sum(axis=0)
    hits = (
        (a == row_max[:, None])
        & (a == col_min[None, :])
        & (row_max_count[:, None] == 1)
        & (col_min_count[None, :] == 1)
    )
    cells = [(int(r), int(c), int(a[r, c])) for r, c in np.argwhere(hits)]
    return OracleResult("strict", cells)


def brute_nonstrict(matrix) -> OracleResult:
    """O(m*n) scan for all cells equal to their row max and column min."""
    a = _as_array(matrix)
    row_max = a.max(axis=1)
    col_min = a.min(axis=0)
    hits = (a == row_max[:, None]) & (a == col_min[None, :])
    cells = [(int(r), int(c), int(a[r, c])) for r, c in np.argwhere(hits)]
    return OracleResult("nonstrict", cells)
