"""The random pool: rejection sampling and d-wise independence.

All randomness flows through a seeded pool of fixed-width words. Uniform
draws from {1..k} mask the next word down to ceil(log2 k) bits and reject
out-of-range values, costing at most two words per draw in expectation.
The pool's words are either fully independent (splitmix64) or d-wise
independent (a random degree-(d-1) polynomial over a prime field), which
needs only O(log n) seed bits for the whole initial budget.
"""

import numpy as np

from saddlepoint import create_pool, gen_dwise, rand_uniform

print("Rejection sampling from {1..6} (dice rolls), seed 42:")
pool = create_pool(42, max_k=6)
rolls = [rand_uniform(pool, 6) for _ in range(20)]
print(f"  draws: {rolls}")
print(f"  words consumed for 20 draws: {pool.words_used} (expect ~{20 * 8 / 6:.0f})")

pool = create_pool(42, max_k=6)
counts = np.bincount(pool.uniform_many(6, 100_000), minlength=7)[1:]
print(f"  100k draws, per-face frequencies: {(counts / 100_000).round(4).tolist()}")

print("\nd-wise independent mode (same drawing interface):")
pool = create_pool(42, max_k=1000, mode="dwise", d=8)
print(f"  word width {pool.word_bits} bits, field prime {pool.prime}")
print(f"  first draws from {{1..1000}}: {[pool.uniform(1000) for _ in range(8)]}")

print("\nPairwise independence is exact, not approximate. For p=5, d=2,")
print("every joint value (f(0), f(1)) appears exactly once over the 25")
print("possible coefficient pairs:")
grid = {}
for a1 in range(5):
    for a0 in range(5):
        f = gen_dwise(0, 2, 5, 2, coeffs=(a1, a0))
        grid[(f[0], f[1])] = grid.get((f[0], f[1]), 0) + 1
print(f"  distinct pairs: {len(grid)}, multiplicities: {sorted(set(grid.values()))}")
