import numpy as np
import pytest

from conftest import rng
from saddlepoint import (
    Matrix,
    brute_strict,
    nosaddle_matrix,
    planted_matrix,
    uniform_matrix,
)


class TestPlanted:
    def test_truth_is_the_unique_strict_saddlepoint(self):
        for seed in range(40):
            inst = planted_matrix(12, 9, seed)
            r, c, v = inst.truth
            res = brute_strict(Matrix(inst.to_array()))
            assert res.cells == [(r, c, v)]

    def test_all_entries_distinct(self):
        inst = planted_matrix(17, 13, 3)
        a = inst.to_array()
        assert len(np.unique(a)) == a.size

    def test_scalar_vector_dense_agree(self):
        inst = planted_matrix(19, 11, 8)
        a = inst.to_array()
        g = rng(1)
        rs = g.integers(0, 19, size=200)
        cs = g.integers(0, 11, size=200)
        batch = inst.get_many(rs, cs)
        for i in range(200):
            r, c = int(rs[i]), int(cs[i])
            assert inst.get(r, c) == int(batch[i]) == int(a[r, c])

    def test_deterministic(self):
        a = planted_matrix(30, 30, 5).to_array()
        b = planted_matrix(30, 30, 5).to_array()
        assert np.array_equal(a, b)

    def test_plant_value_is_mid_range(self):
        inst = planted_matrix(32, 32, 2)
        a = inst.to_array()
        below = (a < inst.plant_value).sum()
        above = (a > inst.plant_value).sum()
        assert below > a.size // 4 and above > a.size // 4

    def test_rejects_degenerate_dims(self):
        with pytest.raises(ValueError):
            planted_matrix(1, 5, 0)
        with pytest.raises(ValueError):
            nosaddle_matrix(1, 5, 0)

    def test_smallest_planted_2x2(self):
        for seed in range(20):
            inst = planted_matrix(2, 2, seed)
            assert brute_strict(Matrix(inst.to_array())).cells == [inst.truth]

    def test_huge_instance_entry_access_is_cheap(self):
        inst = planted_matrix(1 << 16, 1 << 16, 0)
        r, c, v = inst.truth
        assert inst.get(r, c) == v
        assert int(inst.get_many(np.array([r]), np.array([c]))[0]) == v
        # row band below the plant, column band above it
        other_c = (c + 1) % inst.cols
        other_r = (r + 1) % inst.rows
        assert inst.get(r, other_c) < v
        assert inst.get(other_r, c) > v


class TestUniform:
    def test_permutation_values(self):
        m = uniform_matrix(6, 7, 9)
        assert sorted(m.to_array().ravel().tolist()) == list(range(1, 43))

    def test_deterministic(self):
        assert uniform_matrix(5, 5, 3) == uniform_matrix(5, 5, 3)
        assert not (uniform_matrix(5, 5, 3) == uniform_matrix(5, 5, 4))


class TestNoSaddle:
    def test_oracle_confirms_absence(self):
        for seed in range(30):
            m = nosaddle_matrix(6, 6, seed)
            assert not brute_strict(m).found

    def test_still_a_permutation(self):
        m = nosaddle_matrix(5, 4, 11)
        assert sorted(m.to_array().ravel().tolist()) == list(range(1, 21))
