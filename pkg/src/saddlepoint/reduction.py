"""Alternating pivot-and-delete reduction of a view.

Each iteration finds a horizontal pivot and deletes a quarter of the
columns (those lex-smaller than the pivot in its row), then a vertical
pivot and a quarter of the rows (lex-larger in the pivot's column), until
the view's height reaches the target size. Deletions are safe: a deleted
column/row cannot contain the strict saddlepoint, so if the input view had
one, the output view still contains that exact cell. Deletions may create
a spurious saddlepoint inside the view; detecting that is the caller's
final-verification job.

A Failed pivot aborts the call immediately with None; compaction is
functional, so the caller's view is untouched and a retry with fresh
randomness re-runs the level from its entry state.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .matrix import MatrixView, compact_view, lex_greater_mask, lex_less_mask
from .pivots import PivotParams, find_horizontal_pivot, find_vertical_pivot


@dataclass(frozen=True)
class ReduceParams:
    target_size: int
    delete_fraction: float = 0.25
    pivot: PivotParams = field(default_factory=PivotParams)

    def __post_init__(self):
        if self.target_size < 4:
            raise ValueError("target_size must be >= 4")
        if not 0 < self.delete_fraction < 1:
            raise ValueError("delete_fraction must be in (0, 1)")


def reduce_matrix(view: MatrixView, params: ReduceParams, pool):
    """Shrink `view` until height <= target_size; None when a pivot Failed.

    Deletes exactly floor(delete_fraction * size) qualifying columns/rows
    per half-step, first qualifiers in alive order; with a loosened
    validity fraction the pivot may certify fewer, in which case all
    qualifiers are deleted (still safe, slightly slower shrinkage).
    """
    v = view
    counters = v.base.counters
    while v.height > params.target_size:
        piv = find_horizontal_pivot(v, pool, params.pivot)
        if piv is None:
            return None
        quota = int(params.delete_fraction * v.width)
        if quota > 0:
            cols = v.alive_cols
            vals = v.base.read_many(np.full(len(cols), piv.row, dtype=np.int64), cols)
            smaller = lex_less_mask(vals, piv.row, cols, piv.key, counters)
            doomed = np.flatnonzero(smaller)[:quota]
            if len(doomed):
                v = compact_view(v, (), doomed)

        piv = find_vertical_pivot(v, pool, params.pivot)
        if piv is None:
            return None
        quota = int(params.delete_fraction * v.height)
        if quota > 0:
            rows = v.alive_rows
            vals = v.base.read_many(rows, np.full(len(rows), piv.col, dtype=np.int64))
            larger = lex_greater_mask(vals, rows, piv.col, piv.key, counters)
            doomed = np.flatnonzero(larger)[:quota]
            if len(doomed):
                v = compact_view(v, doomed, ())
    return v
