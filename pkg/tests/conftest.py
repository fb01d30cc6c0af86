import numpy as np

from saddlepoint import Counters, CountingMatrix, Matrix, full_view


def make_view(values, counters=None):
    """Full instrumented view over a dense matrix literal."""
    return full_view(CountingMatrix(Matrix(values), counters or Counters()))


def rng(seed):
    return np.random.Generator(np.random.PCG64(seed))


def random_matrix(rows, cols, seed, lo=1, hi=None, distinct=False):
    """Dense random matrix; distinct=True draws a permutation of 1..rows*cols."""
    g = rng(seed)
    if distinct:
        vals = g.permutation(rows * cols).astype(np.int64) + 1
        return Matrix(vals.reshape(rows, cols))
    hi = hi if hi is not None else rows * cols
    return Matrix(g.integers(lo, hi + 1, size=(rows, cols), dtype=np.int64))
