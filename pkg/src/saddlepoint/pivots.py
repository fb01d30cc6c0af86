"""Two-phase randomized horizontal/vertical pivot finders.

A horizontal pivot is a cell p such that every row of the view contains an
entry >= p while at least a quarter (more generally, a validity fraction)
of p's own row is smaller than p; deleting columns smaller than p in p's
row is then safe for strict-saddlepoint search. A vertical pivot is the
order-dual notion for rows.

The finder runs in O(m + k) entry reads. Phase 1 prunes rows: each
surviving row is sampled once per iteration, the threshold t is lowered to
the running minimum of the sample 3/4-quantiles, and rows whose sample
exceeds t are deleted (they certifiably contain an entry above any final
pivot <= t). Phase 2 samples each surviving row c times and keeps a low
order statistic q'_r of the samples; the pivot candidate is the smallest
q'_r. The final checks (p <= t, and a full scan of p's row) make
soundness unconditional: a non-Failed result always satisfies the pivot
predicate, regardless of how unlucky the sampling was.

All comparisons are lexicographic on (value, row, col), so duplicate
values never tie, and every comparison and entry read is charged to the
view's counters. Randomness is consumed in a fixed documented order (rows
in alive order, samples in index order), so runs are bit-reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .matrix import MatrixView, lex_greater_mask, lex_less_mask
from .selection import select_kth


@dataclass(frozen=True)
class PivotParams:
    """Tuning constants for the pivot finders.

    The defaults are the analysis-friendly constants (the ``paper``
    preset). The ``practical`` preset widens the Phase-2 sample count to
    max(sample_floor, ceil(sample_log_factor * log2(units))) and loosens
    the validity check so that desk-scale failure rates are small.
    """

    phase1_quantile: float = 0.75
    stop_exponent: float = 19 / 20
    sample_exponent: float = 1 / 20
    sample_floor: int = 1
    sample_log_factor: float = 0.0
    order_fraction: float = 0.4
    validity_fraction: float = 0.25

    def __post_init__(self):
        if not 0 < self.phase1_quantile < 1:
            raise ValueError("phase1_quantile must be in (0, 1)")
        if not 0 < self.stop_exponent < 1:
            raise ValueError("stop_exponent must be in (0, 1)")
        if not 0 < self.sample_exponent < 1:
            raise ValueError("sample_exponent must be in (0, 1)")
        if not 0 < self.order_fraction < 1:
            raise ValueError("order_fraction must be in (0, 1)")
        if not 0 < self.validity_fraction <= 0.5:
            raise ValueError("validity_fraction must be in (0, 1/2]")
        if self.sample_floor < 1:
            raise ValueError("sample_floor must be >= 1")

    def phase2_count(self, units: int) -> int:
        """Samples per surviving row/column when the view has `units` rows/columns."""
        c = max(self.sample_floor, int(units**self.sample_exponent))
        if self.sample_log_factor > 0 and units > 1:
            c = max(c, math.ceil(self.sample_log_factor * math.log2(units)))
        return c


@dataclass(frozen=True)
class PivotResult:
    row: int
    col: int
    value: int

    @property
    def key(self) -> tuple:
        return (self.value, self.row, self.col)


def find_horizontal_pivot(view: MatrixView, pool, params: PivotParams, trace=None):
    """Find a horizontal pivot of the view, or None when the run Failed.

    On success, at least floor(validity_fraction * width) entries of the
    pivot's row are lex-smaller than it and every row of the view contains
    an entry lex-greater-or-equal — both guaranteed by the final checks,
    not by luck. `trace`, when a list, records the threshold after each
    Phase-1 iteration.
    """
    base = view.base
    counters = base.counters
    all_rows = view.alive_rows
    cols = view.alive_cols
    m = len(all_rows)
    k = len(cols)
    if m == 0 or k == 0:
        raise ValueError("pivot search on an empty view")

    stop = int(m**params.stop_exponent)
    cur_rows = all_rows
    t = None

    # Phase 1: prune rows against a shrinking threshold.
    while len(cur_rows) > stop:
        r = len(cur_rows)
        draws = pool.uniform_many(k, r)
        sample_cols = cols[draws - 1]
        values = base.read_many(cur_rows, sample_cols)
        samples = list(zip(values.tolist(), cur_rows.tolist(), sample_cols.tolist()))
        q = select_kth(samples, math.ceil(params.phase1_quantile * r), counters)
        if t is None:
            t = q
        else:
            counters.comparisons += 1
            if q < t:
                t = q
        if trace is not None:
            trace.append(t)
        keep = ~lex_greater_mask(values, cur_rows, sample_cols, t, counters)
        kept = cur_rows[keep]
        if len(kept) == len(cur_rows):
            break  # nothing deleted; quantile can stall on tiny row sets
        if len(kept) == 0:
            return None  # threshold below every fresh sample
        cur_rows = kept

    # Phase 2: per-row sampled order statistic, pivot = minimum over rows.
    r2 = len(cur_rows)
    c = params.phase2_count(m)
    rank = max(1, int(params.order_fraction * c))
    draws = pool.uniform_many(k, r2 * c)
    sample_cols = cols[draws - 1]
    rep_rows = np.repeat(cur_rows, c)
    values = base.read_many(rep_rows, sample_cols)
    vlist = values.tolist()
    clist = sample_cols.tolist()
    p = None
    for i, row in enumerate(cur_rows.tolist()):
        seg_v = vlist[i * c : (i + 1) * c]
        seg_c = clist[i * c : (i + 1) * c]
        row_samples = list(zip(seg_v, [row] * c, seg_c))
        qr = select_kth(row_samples, rank, counters)
        if p is None:
            p = qr
        else:
            counters.comparisons += 1
            if qr < p:
                p = qr

    # Final checks make the guarantee unconditional.
    if t is not None:
        counters.comparisons += 1
        if p > t:
            return None
    p_row, p_col = p[1], p[2]
    scan_cols = cols[cols != p_col]
    row_vals = base.read_many(np.full(len(scan_cols), p_row, dtype=np.int64), scan_cols)
    smaller = int(lex_less_mask(row_vals, p_row, scan_cols, p, counters).sum())
    if smaller < int(params.validity_fraction * k):
        return None
    return PivotResult(int(p_row), int(p_col), int(p[0]))


def find_vertical_pivot(view: MatrixView, pool, params: PivotParams, trace=None):
    """Order-reversed, transposed mirror of find_horizontal_pivot.

    Columns are the sampled units, the threshold is a running maximum of
    low quantiles, the pivot is the largest per-column high order
    statistic, and validity asks for lex-larger entries in the pivot's
    column while every column keeps an entry <= the pivot.
    """
    base = view.base
    counters = base.counters
    rows = view.alive_rows
    all_cols = view.alive_cols
    m = len(rows)
    k = len(all_cols)
    if m == 0 or k == 0:
        raise ValueError("pivot search on an empty view")

    stop = int(k**params.stop_exponent)
    cur_cols = all_cols
    t = None

    while len(cur_cols) > stop:
        r = len(cur_cols)
        draws = pool.uniform_many(m, r)
        sample_rows = rows[draws - 1]
        values = base.read_many(sample_rows, cur_cols)
        samples = list(zip(values.tolist(), sample_rows.tolist(), cur_cols.tolist()))
        q = select_kth(samples, r + 1 - math.ceil(params.phase1_quantile * r), counters)
        if t is None:
            t = q
        else:
            counters.comparisons += 1
            if t < q:
                t = q
        if trace is not None:
            trace.append(t)
        keep = ~lex_less_mask(values, sample_rows, cur_cols, t, counters)
        kept = cur_cols[keep]
        if len(kept) == len(cur_cols):
            break
        if len(kept) == 0:
            return None
        cur_cols = kept

    r2 = len(cur_cols)
    c = params.phase2_count(k)
    rank = c + 1 - max(1, int(params.order_fraction * c))
    draws = pool.uniform_many(m, r2 * c)
    sample_rows = rows[draws - 1]
    rep_cols = np.repeat(cur_cols, c)
    values = base.read_many(sample_rows, rep_cols)
    vlist = values.tolist()
    rlist = sample_rows.tolist()
    p = None
    for i, col in enumerate(cur_cols.tolist()):
        seg_v = vlist[i * c : (i + 1) * c]
        seg_r = rlist[i * c : (i + 1) * c]
        col_samples = list(zip(seg_v, seg_r, [col] * c))
        qc = select_kth(col_samples, rank, counters)
        if p is None:
            p = qc
        else:
            counters.comparisons += 1
            if p < qc:
                p = qc

    if t is not None:
        counters.comparisons += 1
        if p < t:
            return None
    p_row, p_col = p[1], p[2]
    scan_rows = rows[rows != p_row]
    col_vals = base.read_many(scan_rows, np.full(len(scan_rows), p_col, dtype=np.int64))
    larger = int(lex_greater_mask(col_vals, scan_rows, p_col, p, counters).sum())
    if larger < int(params.validity_fraction * m):
        return None
    return PivotResult(int(p_row), int(p_col), int(p[0]))


# -- independent full-scan validators (test instrumentation, uncounted) ----


def is_horizontal_pivot(view: MatrixView, row: int, col: int, fraction: float = 0.25) -> bool:
    """Full O(m*k) check of the horizontal-pivot predicate under lex order."""
    raw = view.base.base
    cols = view.alive_cols
    k = len(cols)
    key = (raw.get(row, col), row, col)
    smaller = 0
    for r in view.alive_rows.tolist():
        vals = raw.get_many(np.full(k, r, dtype=np.int64), cols)
        if r == row:
            smaller = int(lex_less_mask(vals, r, cols, key).sum())
            continue  # the pivot's own row contains the pivot itself (>= p)
        if not lex_greater_mask(vals, r, cols, key).any():
            return False
    return smaller >= int(fraction * k)


def is_vertical_pivot(view: MatrixView, row: int, col: int, fraction: float = 0.25) -> bool:
    """Full O(m*k) check of the vertical-pivot predicate under lex order."""
    raw = view.base.base
    rows = view.alive_rows
    m = len(rows)
    key = (raw.get(row, col), row, col)
    larger = 0
    for c in view.alive_cols.tolist():
        vals = raw.get_many(rows, np.full(m, c, dtype=np.int64))
        if c == col:
            larger = int(lex_greater_mask(vals, rows, c, key).sum())
            continue
        if not lex_less_mask(vals, rows, c, key).any():
            return False
    return larger >= int(fraction * m)
