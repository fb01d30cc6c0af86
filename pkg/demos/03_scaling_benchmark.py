"""Linear scaling: entry reads double when n doubles.

Instances are implicit (each entry is computed on demand from the seed),
so nothing dense is ever materialized and sizes well past memory limits
are benchmarkable. The full acceptance-scale run is
`sp bench --min-n 4096 --max-n 65536 --trials 11 --csv bench.csv`;
this demo keeps sizes modest so it finishes in a few seconds.
"""

from saddlepoint import preset_params
from saddlepoint.bench import fitted_read_constant, median_reads_by_n, run_scaling_bench

sizes = [512, 1024, 2048, 4096, 8192]
rows = run_scaling_bench(sizes, trials=5, params=preset_params("practical"), master_seed=1)

medians = median_reads_by_n(rows)
print(f"{'n':>6} {'median reads':>14} {'reads/n':>9} {'ratio':>7}")
prev = None
for n in sizes:
    med = medians[n]
    ratio = f"{med / prev:.2f}" if prev else "-"
    print(f"{n:>6} {med:>14.0f} {med / n:>9.1f} {ratio:>7}")
    prev = med

print(f"\nfitted constant C = {fitted_read_constant(rows):.1f}  (entry reads <= C*n on every trial)")
print(f"all {len(rows)} trials found their planted cell: {all(r.found for r in rows)}")
print("restarts across all trials:", sum(r.restarts for r in rows))
