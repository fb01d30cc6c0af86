import numpy as np
import pytest

from conftest import make_view, random_matrix
from saddlepoint import (
    Counters,
    CountingMatrix,
    Matrix,
    PivotParams,
    create_pool,
    find_horizontal_pivot,
    find_vertical_pivot,
    full_view,
    is_horizontal_pivot,
    is_vertical_pivot,
    planted_matrix,
)

PAPER = PivotParams()
PRACTICAL = PivotParams(
    stop_exponent=3 / 5, sample_floor=32, sample_log_factor=4.0, validity_fraction=1 / 8
)


def pivot_view(matrix_like):
    return full_view(CountingMatrix(matrix_like, Counters()))


class TestParams:
    def test_defaults_validated(self):
        with pytest.raises(ValueError):
            PivotParams(phase1_quantile=1.0)
        with pytest.raises(ValueError):
            PivotParams(validity_fraction=0.6)
        with pytest.raises(ValueError):
            PivotParams(sample_floor=0)
        with pytest.raises(ValueError):
            PivotParams(stop_exponent=0.0)

    def test_phase2_count(self):
        assert PAPER.phase2_count(64) == 1  # floor(64^(1/20)) = 1
        assert PAPER.phase2_count(2**21) == 2
        assert PRACTICAL.phase2_count(64) == 32
        assert PRACTICAL.phase2_count(1 << 16) == 64  # ceil(4 * 16)


class TestSingleRowEnumeration:
    def test_1x4_outcomes(self):
        # One row [1,2,3,4], paper params: Phase 1 is skipped (m=1), Phase 2
        # draws a single sample p. Failed iff p = 1 (zero entries smaller
        # than p, needs floor(4/4) = 1); otherwise the pivot is p itself.
        view_vals = [[1, 2, 3, 4]]
        seen = set()
        for seed in range(200):
            v = make_view(view_vals)
            pool = create_pool(seed, 4)
            res = find_horizontal_pivot(v, pool, PAPER)
            if res is None:
                seen.add(None)
            else:
                assert res.value in (2, 3, 4)
                seen.add(res.value)
        assert seen == {None, 2, 3, 4}  # every branch reachable

    def test_4x1_outcomes_mirror(self):
        # One column [1,2,3,4]^T: vertical pivot is the single sample unless
        # it is 4 (zero entries larger).
        seen = set()
        for seed in range(200):
            v = make_view([[1], [2], [3], [4]])
            pool = create_pool(seed, 4)
            res = find_vertical_pivot(v, pool, PAPER)
            if res is None:
                seen.add(None)
            else:
                assert res.value in (1, 2, 3)
                seen.add(res.value)
        assert seen == {None, 1, 2, 3}


class TestPivotPredicate:
    def test_min_row_maxima_is_horizontal_pivot(self):
        # The minimum of all row maxima always satisfies the predicate.
        for seed in range(100):
            m = random_matrix(8, 8, seed=seed, distinct=True)
            a = m.to_array()
            row_max_cols = a.argmax(axis=1)
            i = int(a.max(axis=1).argmin())
            j = int(row_max_cols[i])
            assert is_horizontal_pivot(pivot_view(m), i, j, fraction=0.25)

    def test_max_col_minima_is_vertical_pivot(self):
        for seed in range(100):
            m = random_matrix(8, 8, seed=seed, distinct=True)
            a = m.to_array()
            col_min_rows = a.argmin(axis=0)
            j = int(a.min(axis=0).argmax())
            i = int(col_min_rows[j])
            assert is_vertical_pivot(pivot_view(m), i, j, fraction=0.25)

    def test_validator_rejects_non_pivots(self):
        # The global minimum can never be a horizontal pivot of a 2+ column
        # matrix (nothing in its row is smaller).
        m = random_matrix(6, 6, seed=1, distinct=True)
        a = m.to_array()
        r, c = np.unravel_index(a.argmin(), a.shape)
        assert not is_horizontal_pivot(pivot_view(m), int(r), int(c), 0.25)


class TestSoundness:
    def test_planted_256_seed_42_validates(self):
        inst = planted_matrix(256, 256, 42)
        v = pivot_view(inst)
        pool = create_pool(42, 256)
        res = find_horizontal_pivot(v, pool, PRACTICAL)
        assert res is not None
        assert is_horizontal_pivot(v, res.row, res.col, PRACTICAL.validity_fraction)

    def test_horizontal_sweep_64(self):
        fails = 0
        for seed in range(300):
            m = random_matrix(64, 64, seed=seed, lo=1, hi=64 * 64)
            v = pivot_view(m)
            pool = create_pool(seed, 64)
            res = find_horizontal_pivot(v, pool, PRACTICAL)
            if res is None:
                fails += 1
                continue
            assert is_horizontal_pivot(v, res.row, res.col, PRACTICAL.validity_fraction)
        assert fails < 30  # failures allowed, just not dominant

    def test_vertical_sweep_64(self):
        fails = 0
        for seed in range(300):
            m = random_matrix(64, 64, seed=10_000 + seed, lo=1, hi=64 * 64)
            v = pivot_view(m)
            pool = create_pool(seed, 64)
            res = find_vertical_pivot(v, pool, PRACTICAL)
            if res is None:
                fails += 1
                continue
            assert is_vertical_pivot(v, res.row, res.col, PRACTICAL.validity_fraction)
        assert fails < 30

    def test_paper_params_sound_when_not_failed(self):
        # c = 1 makes Failed likely; any non-Failed result must still pass.
        ok = 0
        for seed in range(400):
            m = random_matrix(32, 32, seed=20_000 + seed, distinct=True)
            v = pivot_view(m)
            res = find_horizontal_pivot(v, create_pool(seed, 32), PAPER)
            if res is not None:
                ok += 1
                assert is_horizontal_pivot(v, res.row, res.col, PAPER.validity_fraction)
        assert ok > 0

    def test_rectangular_views(self):
        for seed in range(100):
            m = random_matrix(48, 17, seed=30_000 + seed, distinct=True)
            v = pivot_view(m)
            res = find_horizontal_pivot(v, create_pool(seed, 48), PRACTICAL)
            if res is not None:
                assert is_horizontal_pivot(v, res.row, res.col, PRACTICAL.validity_fraction)


class TestTransposeDuality:
    def test_vertical_equals_horizontal_on_reversed_transpose(self):
        # With the same word stream, find_vertical_pivot(A) must equal
        # find_horizontal_pivot(B) where B[c][r] = -A[r][c], as long as
        # values are distinct (tie-breaking order differs between the two).
        for seed in range(150):
            m = random_matrix(5, 5, seed=40_000 + seed, distinct=True)
            b = Matrix(-m.to_array().T)
            res_v = find_vertical_pivot(pivot_view(m), create_pool(seed, 5), PAPER)
            res_h = find_horizontal_pivot(pivot_view(b), create_pool(seed, 5), PAPER)
            if res_v is None:
                assert res_h is None
            else:
                assert res_h is not None
                assert (res_h.row, res_h.col, res_h.value) == (
                    res_v.col,
                    res_v.row,
                    -res_v.value,
                )


class TestPhase1Behavior:
    def test_threshold_monotone_under_lex(self):
        for seed in range(50):
            m = random_matrix(128, 128, seed=50_000 + seed, lo=1, hi=200)
            trace = []
            find_horizontal_pivot(pivot_view(m), create_pool(seed, 128), PRACTICAL, trace=trace)
            for a, b in zip(trace, trace[1:]):
                assert b <= a

    def test_three_row_stall_exits_via_guard(self):
        # |R| = 3 > floor(3^0.95) = 2, and the ceil(3/4 * 3) = 3rd smallest
        # sample is the maximum, so the first iteration deletes nothing; the
        # zero-deletion guard must exit Phase 1 rather than loop forever.
        for seed in range(50):
            m = random_matrix(3, 8, seed=60_000 + seed, distinct=True)
            v = pivot_view(m)
            res = find_horizontal_pivot(v, create_pool(seed, 8), PAPER)
            if res is not None:
                assert is_horizontal_pivot(v, res.row, res.col, PAPER.validity_fraction)

    def test_empty_view_rejected(self):
        v = make_view([[1]])
        bad = type(v)(v.base, v.alive_rows[:0], v.alive_cols)
        with pytest.raises(ValueError):
            find_horizontal_pivot(bad, create_pool(0, 1), PAPER)


class TestWorkBound:
    def test_entry_reads_linear_in_m_plus_k(self):
        # Reads <= C_piv * (m + k); pinned envelope with margin over the
        # measured constant (Phase 1 <= ~4m samples + Phase 2 + final scan).
        C_PIV = 12
        for exp in (12, 14, 16):
            n = 1 << exp
            inst = planted_matrix(n, n, seed=exp)
            c = Counters()
            v = full_view(CountingMatrix(inst, c))
            res = find_horizontal_pivot(v, create_pool(exp, n), PRACTICAL)
            assert res is not None
            assert c.entry_reads <= C_PIV * (2 * n), (n, c.entry_reads)

    def test_counts_reproducible(self):
        m = random_matrix(200, 200, seed=77, distinct=True)
        counts = []
        for _ in range(2):
            c = Counters()
            v = full_view(CountingMatrix(m, c))
            find_horizontal_pivot(v, create_pool(5, 200), PRACTICAL)
            counts.append((c.entry_reads, c.comparisons))
        assert counts[0] == counts[1]
