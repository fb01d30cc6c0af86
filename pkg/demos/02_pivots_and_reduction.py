"""Inside the algorithm: pivots and the reduction loop.

A horizontal pivot justifies deleting a quarter of the columns; a vertical
pivot a quarter of the rows. Alternating the two shrinks an n x n matrix
to a small core in O(n) total reads while provably never deleting the
strict saddlepoint's row or column.
"""

from saddlepoint import (
    Counters,
    CountingMatrix,
    ReduceParams,
    create_pool,
    find_horizontal_pivot,
    find_vertical_pivot,
    full_view,
    is_horizontal_pivot,
    is_vertical_pivot,
    planted_matrix,
    preset_params,
    reduce_matrix,
)

params = preset_params("practical")
n = 512
inst = planted_matrix(n, n, seed=7)
counters = Counters()
view = full_view(CountingMatrix(inst, counters))
pool = create_pool(7, n)

print(f"Planted {n}x{n} instance; truth cell = {inst.truth}\n")

hp = find_horizontal_pivot(view, pool, params.pivot)
print(f"horizontal pivot: value {hp.value} at ({hp.row}, {hp.col})")
print(f"  independent full-scan validator: "
      f"{is_horizontal_pivot(view, hp.row, hp.col, params.pivot.validity_fraction)}")

vp = find_vertical_pivot(view, pool, params.pivot)
print(f"vertical pivot:   value {vp.value} at ({vp.row}, {vp.col})")
print(f"  independent full-scan validator: "
      f"{is_vertical_pivot(view, vp.row, vp.col, params.pivot.validity_fraction)}")
print(f"entry reads so far: {counters.entry_reads} (~{counters.entry_reads / n:.1f} per n)\n")

print("Now the full reduction loop, shrinking height to 64:")
out = reduce_matrix(view, ReduceParams(target_size=64, pivot=params.pivot), pool)
r, c, _ = inst.truth
print(f"  final view: {out.height} x {out.width}")
print(f"  planted row still alive: {r in out.alive_rows}")
print(f"  planted col still alive: {c in out.alive_cols}")
print(f"  total entry reads: {counters.entry_reads} (~{counters.entry_reads / n:.1f} per n)")
print(f"  total comparisons: {counters.comparisons}")
print(f"  random words consumed: {pool.words_used}")
