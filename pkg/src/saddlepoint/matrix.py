"""Matrix storage, instrumented access and lexicographic tie-breaking.

Matrices are dense row-major arrays of signed 64-bit integers. Every
algorithm in this package touches entries only through a counting wrapper
(`CountingMatrix`) and compares cells through the lexicographic key
``(value, row, col)``, which is a strict total order even in the presence
of duplicate values. Counter totals are therefore exact, reproducible
measurements of work in the unit-cost comparison model.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


class ParseError(ValueError):
    """Malformed matrix file (bad token, wrong count, bad dimensions)."""


class DegenerateViewError(ValueError):
    """A compaction would leave a view with no rows or no columns."""


class LexKey(NamedTuple):
    """Cell key compared lexicographically; distinct cells never tie."""

    value: int
    row: int
    col: int


@dataclass
class Counters:
    """Per-solver-instance counts of entry reads and key comparisons."""

    entry_reads: int = 0
    comparisons: int = 0

    def snapshot(self) -> tuple[int, int]:
        return (self.entry_reads, self.comparisons)


class Matrix:
    """Dense rectangular matrix of int64 entries."""

    __slots__ = ("rows", "cols", "values")

    def __init__(self, values):
        a = np.asarray(values, dtype=np.int64)
        if a.ndim != 2 or a.shape[0] < 1 or a.shape[1] < 1:
            raise ValueError("matrix must be 2-D with at least one row and column")
        self.values = a
        self.rows = int(a.shape[0])
        self.cols = int(a.shape[1])

    def get(self, r: int, c: int) -> int:
        return int(self.values[r, c])

    def get_many(self, rs, cs) -> np.ndarray:
        return self.values[rs, cs]

    def to_array(self) -> np.ndarray:
        return self.values

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and bool(np.array_equal(self.values, other.values))
        )

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols})"


def load_matrix(stream) -> Matrix:
    """Parse ``m n e00 e01 ...`` (row-major, whitespace-separated) into a Matrix.

    Accepts a text stream or a string. Raises ParseError naming the 1-based
    position of the offending token.
    """
    text = stream if isinstance(stream, str) else stream.read()
    tokens = text.split()
    if len(tokens) < 2:
        raise ParseError(f"expected dimensions, found {len(tokens)} token(s)")

    def _int_at(pos: int) -> int:
        tok = tokens[pos]
        try:
            v = int(tok, 10)
        except ValueError:
            raise ParseError(f"token {pos + 1}: {tok!r} is not a decimal integer") from None
        if not INT64_MIN <= v <= INT64_MAX:
            raise ParseError(f"token {pos + 1}: {tok!r} does not fit a signed 64-bit integer")
        return v

    rows = _int_at(0)
    cols = _int_at(1)
    if rows < 1 or cols < 1:
        raise ParseError(f"token {1 if rows < 1 else 2}: dimensions must be positive, got {rows}x{cols}")
    need = rows * cols
    count = len(tokens) - 2
    if count < need:
        raise ParseError(
            f"expected {need} entries for a {rows}x{cols} matrix, found {count}"
            f" (input ends after token {len(tokens)})"
        )
    if count > need:
        raise ParseError(
            f"expected {need} entries for a {rows}x{cols} matrix;"
            f" unexpected token {need + 3}: {tokens[need + 2]!r}"
        )
    entries = [_int_at(i) for i in range(2, 2 + need)]
    return Matrix(np.array(entries, dtype=np.int64).reshape(rows, cols))


def save_matrix(matrix, stream) -> None:
    """Write the exact text format read by load_matrix (one row per line)."""
    stream.write(f"{matrix.rows} {matrix.cols}\n")
    a = matrix.to_array()
    for r in range(matrix.rows):
        stream.write(" ".join(str(int(x)) for x in a[r]))
        stream.write("\n")


def lex_compare(a, b, counters: Counters | None = None) -> int:
    """Three-way comparison of cell keys; costs one counted comparison.

    Keys are (value, row, col) triples; equality holds only for the same cell
    of the same matrix.
    """
    if counters is not None:
        counters.comparisons += 1
    if a < b:
        return -1
    if b < a:
        return 1
    return 0


def lex_less(a, b, counters: Counters | None = None) -> bool:
    if counters is not None:
        counters.comparisons += 1
    return a < b


def lex_less_mask(values, rows, cols, key, counters: Counters | None = None) -> np.ndarray:
    """Vectorized ``cell < key`` under lex order; one counted comparison per cell.

    `rows` and `cols` may be arrays or scalars (broadcast against values).
    """
    values = np.asarray(values)
    kv, kr, kc = key
    if counters is not None:
        counters.comparisons += values.size
    rows = np.broadcast_to(np.asarray(rows), values.shape)
    cols = np.broadcast_to(np.asarray(cols), values.shape)
    return (values < kv) | (
        (values == kv) & ((rows < kr) | ((rows == kr) & (cols < kc)))
    )


def lex_greater_mask(values, rows, cols, key, counters: Counters | None = None) -> np.ndarray:
    """Vectorized ``cell > key`` under lex order; one counted comparison per cell."""
    values = np.asarray(values)
    kv, kr, kc = key
    if counters is not None:
        counters.comparisons += values.size
    rows = np.broadcast_to(np.asarray(rows), values.shape)
    cols = np.broadcast_to(np.asarray(cols), values.shape)
    return (values > kv) | (
        (values == kv) & ((rows > kr) | ((rows == kr) & (cols > kc)))
    )


class CountingMatrix:
    """Entry-access wrapper charging every read to a Counters instance."""

    __slots__ = ("base", "counters")

    def __init__(self, base, counters: Counters | None = None):
        self.base = base
        self.counters = counters if counters is not None else Counters()

    @property
    def rows(self) -> int:
        return self.base.rows

    @property
    def cols(self) -> int:
        return self.base.cols

    def read(self, r: int, c: int) -> int:
        self.counters.entry_reads += 1
        return self.base.get(r, c)

    def key(self, r: int, c: int) -> tuple:
        self.counters.entry_reads += 1
        return (self.base.get(r, c), r, c)

    def read_many(self, rs, cs) -> np.ndarray:
        rs = np.asarray(rs)
        cs = np.asarray(cs)
        n = max(rs.size, cs.size)
        self.counters.entry_reads += n
        return self.base.get_many(rs, cs)


@dataclass
class MatrixView:
    """Live submatrix: a base matrix plus alive row/column index arrays.

    Alive arrays hold strictly increasing original indices; compaction
    builds new arrays and never reorders survivors.
    """

    base: CountingMatrix
    alive_rows: np.ndarray
    alive_cols: np.ndarray

    @property
    def height(self) -> int:
        return len(self.alive_rows)

    @property
    def width(self) -> int:
        return len(self.alive_cols)


def full_view(counting: CountingMatrix) -> MatrixView:
    return MatrixView(
        counting,
        np.arange(counting.rows, dtype=np.int64),
        np.arange(counting.cols, dtype=np.int64),
    )


def window_view(counting: CountingMatrix, row_lo: int, row_hi: int, col_lo: int, col_hi: int) -> MatrixView:
    """View of the half-open index window [row_lo, row_hi) x [col_lo, col_hi)."""
    return MatrixView(
        counting,
        np.arange(row_lo, row_hi, dtype=np.int64),
        np.arange(col_lo, col_hi, dtype=np.int64),
    )


def compact_view(view: MatrixView, remove_rows, remove_cols) -> MatrixView:
    """Drop the given view-relative row/column positions; survivors keep order.

    Cost is linear in the current view size. Raises DegenerateViewError if a
    removal set would empty an axis.
    """
    rr = np.asarray(sorted(set(map(int, remove_rows))), dtype=np.int64)
    rc = np.asarray(sorted(set(map(int, remove_cols))), dtype=np.int64)
    h, w = view.height, view.width
    if rr.size and (rr[0] < 0 or rr[-1] >= h):
        raise ValueError(f"row position out of range 0..{h - 1}")
    if rc.size and (rc[0] < 0 or rc[-1] >= w):
        raise ValueError(f"column position out of range 0..{w - 1}")
    if rr.size >= h:
        raise DegenerateViewError("removal would delete every row")
    if rc.size >= w:
        raise DegenerateViewError("removal would delete every column")
    keep_r = np.ones(h, dtype=bool)
    keep_r[rr] = False
    keep_c = np.ones(w, dtype=bool)
    keep_c[rc] = False
    return MatrixView(view.base, view.alive_rows[keep_r], view.alive_cols[keep_c])
