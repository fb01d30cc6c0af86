"""Scaling benchmark: solve planted instances over doubling sizes.

Instances are implicit (O(1) per entry), so sizes far beyond dense-storage
limits are benchmarkable; the solver reads O(n) entries of an n x n
instance. One row per (n, seed) trial, sorted, with counters and wall time.
"""

from __future__ import annotations

from dataclasses import dataclass

from .generators import planted_matrix
from .randomness import derive_seed
from .solver import SolveParams, find_strict_saddlepoint


@dataclass
class BenchRow:
    n: int
    seed: int
    comparisons: int
    entry_reads: int
    restarts: int
    time_ns: int
    found: bool


def doubling_sizes(min_n: int, max_n: int) -> list[int]:
    sizes = []
    n = min_n
    while n <= max_n:
        sizes.append(n)
        n *= 2
    return sizes


def run_scaling_bench(
    sizes,
    trials: int,
    params: SolveParams | None = None,
    master_seed: int = 0,
) -> list[BenchRow]:
    rows = []
    for n in sizes:
        for t in range(trials):
            seed = derive_seed(derive_seed(master_seed, n), t)
            inst = planted_matrix(n, n, seed)
            rep = find_strict_saddlepoint(inst, params, seed=seed)
            rows.append(
                BenchRow(
                    n,
                    seed,
                    rep.comparisons,
                    rep.entry_reads,
                    rep.restarts,
                    rep.wall_time_ns,
                    rep.outcome == "found",
                )
            )
    rows.sort(key=lambda r: (r.n, r.seed))
    return rows


def fitted_read_constant(rows) -> float:
    """Smallest C with entry_reads <= C * n across every benchmark row."""
    return max(r.entry_reads / r.n for r in rows)


def median_reads_by_n(rows) -> dict[int, float]:
    by_n: dict[int, list[int]] = {}
    for r in rows:
        by_n.setdefault(r.n, []).append(r.entry_reads)
    out = {}
    for n, reads in sorted(by_n.items()):
        reads.sort()
        m = len(reads)
        mid = reads[m // 2] if m % 2 else (reads[m // 2 - 1] + reads[m // 2]) / 2
        out[n] = float(mid)
    return out
