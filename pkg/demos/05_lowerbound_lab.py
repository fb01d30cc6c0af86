"""Why non-strict saddlepoints cost Omega(n^2): the hard distribution.

Start from zeros, plant a random 2 in every row, then rewrite one chosen 2
as +1 or -1. Until a strategy reads that rewritten cell it cannot tell
"saddle value 0" from "value 1 or none", and finding it among the planted
cells takes on the order of n^2 probes. The harness measures concrete
strategies under a budget of n^2/1000 reads; no experiment proves the
bound, this just shows the regime.
"""

from saddlepoint import (
    STRATEGIES,
    brute_nonstrict,
    classify_hard_instance,
    create_pool,
    gen_hard_matrix,
    run_budget_experiment,
)

print("One instance at n=8:")
inst = gen_hard_matrix(8, create_pool(3, 8))
print(inst.matrix.to_array())
print(f"  t = {inst.t_value} at ({inst.t_row}, {inst.t_col})")
print(f"  ground truth (case analysis): {classify_hard_instance(inst)}")
print(f"  brute-force non-strict scan : {brute_nonstrict(inst.matrix).value}")

print("\nBudgeted experiment, n=200, budget = n^2/1000 = 40 reads, 1000 trials:")
for name in ("rowscan", "random"):
    rec = run_budget_experiment(STRATEGIES[name], n=200, trials=1000,
                                budget_divisor=1000, seed=11)
    print(f"  {name:>8}: success rate {rec.success_rate:.3f}, "
          f"mean reads {rec.mean_reads:.1f} of {rec.budget}")

print("\nWith the full n^2 budget the full-scan strategy is exact:")
rec = run_budget_experiment(STRATEGIES["full"], n=40, trials=200,
                            budget_divisor=1, seed=12)
print(f"  full scan: success rate {rec.success_rate:.3f} (budget {rec.budget})")

print("\nGuessing blindly answers correctly about half the time (t = -1 gives")
print("value 0 with probability 1/2), which is exactly what a tiny budget buys.")
