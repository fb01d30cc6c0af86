"""Las Vegas strict-saddlepoint solver.

The square path lifts entries to lexicographic keys (value, row, col) so
duplicates never tie, reduces the matrix recursively with target size
max(base_case_size, ceil(n / log2 n)), solves the final view by an
exhaustive lex scan, and finally verifies the surviving candidate against
the original matrix with raw-value strict comparisons — the only step
where duplicate values can disqualify a lex-strict candidate. A Failed
reduction retries with fresh randomness up to max_restarts_per_level
times, after which the level is solved by the exhaustive scan, so the
answer is always exact and only the running time is random.

Rectangular matrices are covered by overlapping square windows along the
long dimension; the only possible global candidate among the windows'
local saddlepoints is the minimum (tall) or maximum (wide), which is then
verified against the full matrix.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass, field, replace

import numpy as np

from .matrix import Counters, CountingMatrix, MatrixView, full_view, window_view
from .pivots import PivotParams
from .randomness import create_pool, derive_seed
from .reduction import ReduceParams, reduce_matrix


@dataclass(frozen=True)
class SolveParams:
    base_case_size: int = 64
    max_restarts_per_level: int = 20
    delete_fraction: float = 0.25
    pivot: PivotParams = field(default_factory=PivotParams)
    rng_mode: str = "full"
    dwise_d: int = 8
    label: str = "custom"

    def __post_init__(self):
        if self.base_case_size < 4:
            raise ValueError("base_case_size must be >= 4")
        if self.max_restarts_per_level < 1:
            raise ValueError("max_restarts_per_level must be >= 1")

    def target_size(self, n: int) -> int:
        return max(self.base_case_size, math.ceil(n / math.log2(n)))


PRESETS = {
    # Analysis-faithful constants; Phase 2 draws a single sample per row at
    # desk scales, so pivot failures are frequent and the restart/fallback
    # machinery carries correctness. Small base case so reduction actually
    # runs at the sizes where this preset is exercised.
    "paper": SolveParams(base_case_size=16, pivot=PivotParams(), label="paper"),
    # Desk-scale constants: more Phase-2 samples, earlier Phase-1 stop and a
    # looser validity check; failure rates drop to ~1% while total work
    # stays a small constant times n.
    "practical": SolveParams(
        base_case_size=64,
        pivot=PivotParams(
            stop_exponent=3 / 5,
            sample_floor=32,
            sample_log_factor=4.0,
            validity_fraction=1 / 8,
        ),
        label="practical",
    ),
}


def preset_params(name: str, rng_mode: str = "full", dwise_d: int = 8) -> SolveParams:
    if name not in PRESETS:
        raise ValueError(f"unknown preset {name!r} (expected one of {sorted(PRESETS)})")
    return replace(PRESETS[name], rng_mode=rng_mode, dwise_d=dwise_d)


_REPORT_FIELDS = (
    "outcome",
    "row",
    "col",
    "value",
    "comparisons",
    "entry_reads",
    "restarts",
    "random_words",
    "wall_time_ns",
    "seed",
    "preset",
)


@dataclass
class SolveReport:
    outcome: str  # "found" | "none"
    row: int | None
    col: int | None
    value: int | None
    comparisons: int
    entry_reads: int
    restarts: int
    random_words: int
    wall_time_ns: int
    seed: int
    preset: str

    def to_dict(self) -> dict:
        return {name: getattr(self, name) for name in _REPORT_FIELDS}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(", ", ": "))

    def same_result(self, other: "SolveReport") -> bool:
        """Equality on every field except wall time."""
        return all(
            getattr(self, f) == getattr(other, f)
            for f in _REPORT_FIELDS
            if f != "wall_time_ns"
        )


class _State:
    __slots__ = ("restarts",)

    def __init__(self):
        self.restarts = 0


def verify_strict_candidate(matrix, row: int, col: int, counters: Counters | None = None) -> bool:
    """Raw-value check that (row, col) strictly dominates its row and is
    strictly dominated by its column.

    Counts follow the short-circuiting left-to-right scan: exactly
    (width-1) + (height-1) comparisons when the answer is True.
    """
    m, n = matrix.rows, matrix.cols
    if not (0 <= row < m and 0 <= col < n):
        raise ValueError(f"({row}, {col}) outside a {m}x{n} matrix")
    return _verify_within(
        matrix,
        row,
        col,
        np.arange(m, dtype=np.int64),
        np.arange(n, dtype=np.int64),
        counters,
    )


def _verify_within(matrix, row, col, row_idx, col_idx, counters) -> bool:
    v = matrix.get(row, col)
    reads = 1
    comps = 0
    ok = True
    cs = col_idx[col_idx != col]
    if len(cs):
        vals = matrix.get_many(np.full(len(cs), row, dtype=np.int64), cs)
        viol = vals >= v
        if viol.any():
            first = int(np.argmax(viol))
            comps += first + 1
            reads += first + 1
            ok = False
        else:
            comps += len(cs)
            reads += len(cs)
    if ok:
        rs = row_idx[row_idx != row]
        if len(rs):
            vals = matrix.get_many(rs, np.full(len(rs), col, dtype=np.int64))
            viol = vals <= v
            if viol.any():
                first = int(np.argmax(viol))
                comps += first + 1
                reads += first + 1
                ok = False
            else:
                comps += len(rs)
                reads += len(rs)
    if counters is not None:
        counters.comparisons += comps
        counters.entry_reads += reads
    return ok


def solve_base_case(view: MatrixView):
    """Exhaustive lex scan: the cell that is the strict row maximum and
    strict column minimum of the view, or None. Reads every view entry."""
    base = view.base
    counters = base.counters
    rows = view.alive_rows
    cols = view.alive_cols
    h, w = len(rows), len(cols)
    row_max_pos = np.empty(h, dtype=np.int64)
    best_vals = None
    best_row = None
    for i in range(h):
        vals = base.read_many(np.full(w, rows[i], dtype=np.int64), cols)
        if w > 1:
            counters.comparisons += w - 1
        mx = vals.max()
        row_max_pos[i] = np.flatnonzero(vals == mx)[-1]  # lex tie -> larger col
        if best_vals is None:
            best_vals = vals.copy()
            best_row = np.zeros(w, dtype=np.int64)
        else:
            counters.comparisons += w
            better = vals < best_vals  # lex tie -> keep earlier (smaller) row
            best_vals[better] = vals[better]
            best_row[better] = i
    for i in range(h):
        pos = row_max_pos[i]
        if best_row[pos] == i:
            return (int(rows[i]), int(cols[pos]))
    return None


def _solve_square(view: MatrixView, pool, params: SolveParams, state: _State):
    """Reduce-then-recurse on a view; returns the lex-strict candidate cell."""
    while view.height > params.base_case_size:
        s = params.target_size(view.height)
        rparams = ReduceParams(s, params.delete_fraction, params.pivot)
        reduced = None
        for _ in range(params.max_restarts_per_level):
            reduced = reduce_matrix(view, rparams, pool)
            if reduced is not None:
                break
            state.restarts += 1
        if reduced is None:
            return solve_base_case(view)  # deterministic fallback for this level
        view = reduced
    return solve_base_case(view)


def find_strict_saddlepoint(matrix, params: SolveParams | None = None, seed: int = 0) -> SolveReport:
    """Locate the strict saddlepoint of `matrix` or report non-existence.

    Always exact (agrees with the brute-force oracle); the counters and the
    restart count describe how much work the randomized path needed.
    """
    if params is None:
        params = PRESETS["practical"]
    if matrix.rows != matrix.cols:
        return solve_rectangular(matrix, params, seed)
    t0 = time.perf_counter_ns()
    counters = Counters()
    cm = CountingMatrix(matrix, counters)
    state = _State()
    pool = create_pool(seed, matrix.rows, params.rng_mode, params.dwise_d)
    cand = _solve_square(full_view(cm), pool, params, state)
    outcome, row, col, value = "none", None, None, None
    if cand is not None:
        r, c = cand
        if verify_strict_candidate(matrix, r, c, counters):
            outcome, row, col = "found", r, c
            value = int(matrix.get(r, c))
    return SolveReport(
        outcome,
        row,
        col,
        value,
        counters.comparisons,
        counters.entry_reads,
        state.restarts,
        pool.words_used,
        time.perf_counter_ns() - t0,
        seed,
        params.label,
    )


def solve_rectangular(matrix, params: SolveParams | None = None, seed: int = 0) -> SolveReport:
    """Cover the long dimension with overlapping square windows, solve each,
    and verify the only viable candidate among the local saddlepoints."""
    if params is None:
        params = PRESETS["practical"]
    m, n = matrix.rows, matrix.cols
    if m == n:
        raise ValueError("matrix is square; use find_strict_saddlepoint")
    t0 = time.perf_counter_ns()
    counters = Counters()
    cm = CountingMatrix(matrix, counters)
    state = _State()
    tall = m > n
    a, b = (n, m) if tall else (m, n)
    nwin = -(-b // a)
    starts = [i * a for i in range(nwin)]
    starts[-1] = b - a  # end-align the last window; overlap is harmless

    words = 0
    local = []
    for wi, st in enumerate(starts):
        pool = create_pool(derive_seed(seed, wi), a, params.rng_mode, params.dwise_d)
        if tall:
            view = window_view(cm, st, st + a, 0, n)
        else:
            view = window_view(cm, 0, m, st, st + a)
        cand = _solve_square(view, pool, params, state)
        words += pool.words_used
        if cand is not None:
            r, c = cand
            if _verify_within(matrix, r, c, view.alive_rows, view.alive_cols, counters):
                local.append((int(matrix.get(r, c)), r, c))
                counters.entry_reads += 1

    outcome, row, col, value = "none", None, None, None
    if local:
        # A tall matrix's global saddlepoint is strictly below every other
        # window's local saddlepoint (it is a full-column minimum); a wide
        # one is strictly above (full-row maximum).
        v, r, c = min(local) if tall else max(local)
        if verify_strict_candidate(matrix, r, c, counters):
            outcome, row, col, value = "found", r, c, v
    return SolveReport(
        outcome,
        row,
        col,
        value,
        counters.comparisons,
        counters.entry_reads,
        state.restarts,
        words,
        time.perf_counter_ns() - t0,
        seed,
        params.label,
    )
