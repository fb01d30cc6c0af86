"""Instance generators: planted, uniform and saddle-free matrices.

The planted generator is implicit: every entry is an O(1) function of
(row, col, seed), so instances far too large to materialize can still be
solved (the solver reads O(n) entries). The construction reserves three
disjoint value bands:

* the planted row gets distinct values below everything else,
* the planted column gets distinct values above everything else,
* every other cell gets a distinct pseudorandom value from the middle
  band, placed by a 4-round Feistel permutation of its cell index, so the
  planted cell's value sits mid-range among the generic entries.

The planted cell is then the unique strict saddlepoint by construction,
and its coordinates are recorded as ground truth.
"""

from __future__ import annotations

import numpy as np

from .matrix import Matrix
from .oracles import brute_strict
from .randomness import mix64

_ROUNDS = 4


class PlantedMatrix:
    """Implicit rows x cols matrix whose strict saddlepoint is known."""

    __slots__ = ("rows", "cols", "seed", "plant_row", "plant_col", "plant_value",
                 "_keys", "_rot_row", "_rot_col", "_n_cells", "_half_bits",
                 "_half_mask", "_total_bits", "_clash_src")

    def __init__(self, rows: int, cols: int, seed: int = 0):
        if rows < 2 or cols < 2:
            raise ValueError("planted instances need rows, cols >= 2")
        self.rows = rows
        self.cols = cols
        self.seed = seed
        n_cells = rows * cols
        self._n_cells = n_cells
        total_bits = max(2, (n_cells - 1).bit_length())
        total_bits += total_bits & 1
        self._total_bits = total_bits
        self._half_bits = total_bits // 2
        self._half_mask = (1 << self._half_bits) - 1
        base = mix64(seed ^ 0xA5A5A5A55A5A5A5A)
        self._keys = tuple(mix64(base + r) for r in range(1, _ROUNDS + 1))
        self.plant_row = mix64(base + 101) % rows
        self.plant_col = mix64(base + 202) % cols
        self._rot_row = mix64(base + 303) % cols
        self._rot_col = mix64(base + 404) % rows
        self.plant_value = n_cells // 2
        # The generic cell whose permuted image collides with the planted
        # value is remapped to the plant cell's unused image.
        self._clash_src = self._permute_scalar(self.plant_row * cols + self.plant_col)

    @property
    def truth(self) -> tuple[int, int, int]:
        return (self.plant_row, self.plant_col, self.plant_value)

    # -- Feistel permutation of cell indices ------------------------------

    def _permute_scalar(self, u: int) -> int:
        n = self._n_cells
        hb, hm = self._half_bits, self._half_mask
        while True:
            left = u >> hb
            right = u & hm
            for key in self._keys:
                left, right = right, left ^ (mix64(right + key) & hm)
            u = (left << hb) | right
            if u < n:
                return u

    def _permute_vec(self, u: np.ndarray) -> np.ndarray:
        n = np.uint64(self._n_cells)
        hb = np.uint64(self._half_bits)
        hm = np.uint64(self._half_mask)
        u = u.astype(np.uint64)
        out = np.empty_like(u)
        todo = np.arange(len(u))
        with np.errstate(over="ignore"):
            while len(todo):
                cur = u[todo]
                left = cur >> hb
                right = cur & hm
                for key in self._keys:
                    f = _mix_vec(right + np.uint64(key)) & hm
                    left, right = right, left ^ f
                cur = (left << hb) | right
                done = cur < n
                out[todo[done]] = cur[done]
                u[todo] = cur
                todo = todo[~done]
        return out.astype(np.int64)

    # -- entry access ------------------------------------------------------

    def get(self, r: int, c: int) -> int:
        if r == self.plant_row:
            if c == self.plant_col:
                return self.plant_value
            return -1 - ((c + self._rot_row) % self.cols)
        if c == self.plant_col:
            return self._n_cells + 1 + ((r + self._rot_col) % self.rows)
        g = self._permute_scalar(r * self.cols + c)
        if g == self.plant_value:
            g = self._clash_src
        return g

    def get_many(self, rs, cs) -> np.ndarray:
        rs = np.asarray(rs, dtype=np.int64)
        cs = np.asarray(cs, dtype=np.int64)
        rs, cs = np.broadcast_arrays(rs, cs)
        out = np.empty(rs.shape, dtype=np.int64)
        in_row = rs == self.plant_row
        in_col = cs == self.plant_col
        generic = ~(in_row | in_col)
        if generic.any():
            g = self._permute_vec((rs[generic] * self.cols + cs[generic]).astype(np.uint64))
            g[g == self.plant_value] = self._clash_src
            out[generic] = g
        row_only = in_row & ~in_col
        if row_only.any():
            out[row_only] = -1 - ((cs[row_only] + self._rot_row) % self.cols)
        col_only = in_col & ~in_row
        if col_only.any():
            out[col_only] = self._n_cells + 1 + ((rs[col_only] + self._rot_col) % self.rows)
        out[in_row & in_col] = self.plant_value
        return out

    def to_array(self) -> np.ndarray:
        rr, cc = np.meshgrid(
            np.arange(self.rows, dtype=np.int64),
            np.arange(self.cols, dtype=np.int64),
            indexing="ij",
        )
        return self.get_many(rr.ravel(), cc.ravel()).reshape(self.rows, self.cols)


def _mix_vec(x: np.ndarray) -> np.ndarray:
    x = (x ^ (x >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
    x = (x ^ (x >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
    return x ^ (x >> np.uint64(31))


def planted_matrix(rows: int, cols: int, seed: int = 0) -> PlantedMatrix:
    """Instance with a known unique strict saddlepoint at a seeded location."""
    return PlantedMatrix(rows, cols, seed)


def uniform_matrix(rows: int, cols: int, seed: int = 0) -> Matrix:
    """Uniformly random permutation of {1..rows*cols} (dense)."""
    if rows < 1 or cols < 1:
        raise ValueError("dimensions must be >= 1")
    rng = np.random.Generator(np.random.PCG64(seed))
    values = rng.permutation(rows * cols).astype(np.int64) + 1
    return Matrix(values.reshape(rows, cols))


def nosaddle_matrix(rows: int, cols: int, seed: int = 0, max_tries: int = 10000) -> Matrix:
    """Uniform permutation matrix conditioned on having no strict saddlepoint.

    Rejection sampling against the brute-force oracle; a uniform matrix has
    a strict saddlepoint with low probability at moderate sizes, so few
    tries are expected.
    """
    if rows < 2 or cols < 2:
        raise ValueError("saddle-free instances need rows, cols >= 2")
    rng = np.random.Generator(np.random.PCG64(seed))
    for _ in range(max_tries):
        values = rng.permutation(rows * cols).astype(np.int64) + 1
        m = Matrix(values.reshape(rows, cols))
        if not brute_strict(m).found:
            return m
    raise RuntimeError(f"no saddle-free instance after {max_tries} tries")
