import numpy as np
import pytest

from saddlepoint import create_pool, gen_dwise, rand_uniform
from saddlepoint.randomness import is_prime, next_prime


def find_seed(predicate, limit=50000):
    """Smallest seed whose pool word stream satisfies `predicate`."""
    for seed in range(limit):
        if predicate(seed):
            return seed
    raise AssertionError("no seed found; premise unmet")


class TestCreatePool:
    def test_word_bits_floor(self):
        assert create_pool(7, 1).word_bits == 1

    def test_word_bits_1000(self):
        assert create_pool(7, 1000).word_bits == 10

    def test_word_bits_exact_powers(self):
        assert create_pool(0, 1024).word_bits == 10
        assert create_pool(0, 1025).word_bits == 11

    def test_determinism(self):
        a = create_pool(7, 1000)
        b = create_pool(7, 1000)
        assert [a.next_word() for _ in range(200)] == [b.next_word() for _ in range(200)]

    def test_dwise_determinism(self):
        a = create_pool(7, 1000, "dwise")
        b = create_pool(7, 1000, "dwise")
        assert [a.next_word() for _ in range(200)] == [b.next_word() for _ in range(200)]

    def test_modes_validated(self):
        with pytest.raises(ValueError):
            create_pool(0, 10, "bogus")
        with pytest.raises(ValueError):
            create_pool(0, 0)
        with pytest.raises(ValueError):
            create_pool(0, 10, "dwise", d=3)

    def test_take_words_matches_next_word(self):
        a = create_pool(6, 500)
        b = create_pool(6, 500)
        assert a.take_words(300).tolist() == [b.next_word() for _ in range(300)]
        assert a.words_used == b.words_used == 300


class TestRandUniform:
    def test_k1_consumes_one_word(self):
        pool = create_pool(3, 8)
        assert rand_uniform(pool, 1) == 1
        assert pool.words_used == 1

    def test_k8_low_bits_plus_one(self):
        # b = low 3 bits of the next word; result is b + 1.
        seed = find_seed(lambda s: create_pool(s, 8).next_word() & 7 == 0b101)
        pool = create_pool(seed, 8)
        assert rand_uniform(pool, 8) == 6
        assert pool.words_used == 1

    def test_k3_rejection_path(self):
        # First word's low 2 bits = 0b11 (rejected, 3 >= 3), next = 0b01 -> 2.
        def premise(s):
            p = create_pool(s, 8)
            return p.next_word() & 3 == 0b11 and p.next_word() & 3 == 0b01

        seed = find_seed(premise)
        pool = create_pool(seed, 8)
        assert rand_uniform(pool, 3) == 2
        assert pool.words_used == 2

    def test_range_and_out_of_range(self):
        pool = create_pool(1, 100)
        draws = [rand_uniform(pool, 13) for _ in range(2000)]
        assert min(draws) == 1 and max(draws) == 13
        with pytest.raises(ValueError):
            rand_uniform(pool, 129)  # 2^word_bits = 128

    def test_batch_equals_scalar_full(self):
        a = create_pool(42, 5000)
        b = create_pool(42, 5000)
        xs = [a.uniform(617) for _ in range(4000)]
        ys = b.uniform_many(617, 4000).tolist()
        assert xs == ys
        assert a.words_used == b.words_used

    def test_batch_equals_scalar_dwise(self):
        a = create_pool(42, 500, "dwise")
        b = create_pool(42, 500, "dwise")
        xs = [a.uniform(300) for _ in range(3000)]
        ys = b.uniform_many(300, 3000).tolist()
        assert xs == ys
        assert a.words_used == b.words_used

    def test_expected_words_per_draw_at_most_two(self):
        # Acceptance probability >= 1/2 for any k. Check the tightest cases.
        for k in (5, 9, 17, 33, 513):
            pool = create_pool(10, 1024)
            n = 30000
            pool.uniform_many(k, n)
            assert pool.words_used / n <= 2.05, f"k={k}"

    def test_chi_square_uniformity(self):
        from scipy.stats import chisquare

        pool = create_pool(2024, 64)
        k = 6
        draws = pool.uniform_many(k, 10**6)
        counts = np.bincount(draws, minlength=k + 1)[1:]
        assert counts.sum() == 10**6
        res = chisquare(counts)
        assert res.pvalue > 0.001


class TestGenDwise:
    def test_forced_zero_coefficients(self):
        assert gen_dwise(0, 5, 7, 2, coeffs=(0, 0)) == [0, 0, 0, 0, 0]

    def test_p2_linear(self):
        # f(x) = 1*x + 1 mod 2
        assert gen_dwise(0, 2, 2, 2, coeffs=(1, 1)) == [1, 0]

    def test_p5_linear(self):
        # f(x) = 2x + 3 mod 5 at x = 0..3
        assert gen_dwise(0, 4, 5, 2, coeffs=(2, 3)) == [3, 0, 2, 4]

    def test_nonprime_rejected(self):
        with pytest.raises(ValueError, match="not prime"):
            gen_dwise(0, 4, 6, 2)

    def test_d_validated(self):
        with pytest.raises(ValueError):
            gen_dwise(0, 4, 5, 3)
        with pytest.raises(ValueError):
            gen_dwise(0, 4, 5, 0)

    def test_deterministic_given_inputs(self):
        assert gen_dwise(99, 20, 11, 4) == gen_dwise(99, 20, 11, 4)

    def test_pairwise_independence_exhaustive(self):
        # p=5, d=2: over all 25 coefficient pairs, (f(x1), f(x2)) hits every
        # value pair exactly once for any fixed distinct x1, x2.
        for x1, x2 in ((0, 1), (1, 3), (2, 4)):
            seen = {}
            for a1 in range(5):
                for a0 in range(5):
                    f = gen_dwise(0, 5, 5, 2, coeffs=(a1, a0))
                    pair = (f[x1], f[x2])
                    seen[pair] = seen.get(pair, 0) + 1
            assert len(seen) == 25
            assert set(seen.values()) == {1}

    def test_pool_words_are_polynomial_values_with_rejection(self):
        # The dwise pool's stream is f(0), f(1), ... with values >= 2^w dropped.
        pool = create_pool(31, 1000, "dwise", d=8)
        p = pool.prime
        raw = gen_dwise(0, 3000, p, 8, coeffs=pool._coeffs)
        expected = [v for v in raw if v < 2**pool.word_bits][:500]
        got = [pool.next_word() for _ in range(500)]
        assert got == expected


class TestPrimes:
    def test_is_prime_small(self):
        primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41}
        for n in range(2, 43):
            assert is_prime(n) == (n in primes)

    def test_next_prime_at_powers_of_two(self):
        assert next_prime(2) == 2
        assert next_prime(4) == 5
        assert next_prime(2**16) == 65537

    def test_next_prime_brute_check(self):
        for n in (10, 100, 1 << 10, 1 << 16, 1 << 20):
            p = next_prime(n)
            assert p >= n and is_prime(p)
            assert all(not is_prime(q) for q in range(n, p))
