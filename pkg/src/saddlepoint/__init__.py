"""Randomized linear-time strict saddlepoint search in the comparison model.

A strict saddlepoint of a matrix is the entry strictly greater than the
rest of its row and strictly smaller than the rest of its column; it is
unique when it exists and equals the value of the corresponding zero-sum
game. This package finds it (or reports non-existence) reading only O(n)
entries of an n x n matrix with high probability, while remaining exact on
every input: randomness affects the running time, never the answer.

Alongside the solver: brute-force oracles, instance generators (planted,
uniform, saddle-free, and the hard distribution under which even
randomized non-strict saddlepoint detection needs quadratically many
queries), counted entry/comparison instrumentation, a d-wise independent
low-randomness mode, a scaling benchmark, and the `sp` command line tool.
"""

from .bench import BenchRow, doubling_sizes, fitted_read_constant, median_reads_by_n, run_scaling_bench
from .generators import PlantedMatrix, nosaddle_matrix, planted_matrix, uniform_matrix
from .hardlab import (
    STRATEGIES,
    BudgetedMatrix,
    BudgetExceeded,
    ExperimentRecord,
    HardInstance,
    classify_hard_instance,
    full_scan_strategy,
    gen_hard_matrix,
    random_probe_strategy,
    row_scan_strategy,
    run_budget_experiment,
)
from .matrix import (
    Counters,
    CountingMatrix,
    DegenerateViewError,
    LexKey,
    Matrix,
    MatrixView,
    ParseError,
    compact_view,
    full_view,
    lex_compare,
    lex_less,
    load_matrix,
    save_matrix,
    window_view,
)
from .oracles import OracleResult, brute_nonstrict, brute_strict
from .pivots import (
    PivotParams,
    PivotResult,
    find_horizontal_pivot,
    find_vertical_pivot,
    is_horizontal_pivot,
    is_vertical_pivot,
)
from .randomness import RandomPool, create_pool, derive_seed, gen_dwise, mix64, rand_uniform
from .reduction import ReduceParams, reduce_matrix
from .selection import select_kth
from .solver import (
    PRESETS,
    SolveParams,
    SolveReport,
    find_strict_saddlepoint,
    preset_params,
    solve_base_case,
    solve_rectangular,
    verify_strict_candidate,
)

__version__ = "0.1.0"

__all__ = [
    "BenchRow",
    "BudgetExceeded",
    "BudgetedMatrix",
    "Counters",
    "CountingMatrix",
    "DegenerateViewError",
    "ExperimentRecord",
    "HardInstance",
    "LexKey",
    "Matrix",
    "MatrixView",
    "OracleResult",
    "ParseError",
    "PivotParams",
    "PivotResult",
    "PlantedMatrix",
    "PRESETS",
    "RandomPool",
    "ReduceParams",
    "STRATEGIES",
    "SolveParams",
    "SolveReport",
    "brute_nonstrict",
    "brute_strict",
    "classify_hard_instance",
    "compact_view",
    "create_pool",
    "derive_seed",
    "doubling_sizes",
    "find_horizontal_pivot",
    "find_strict_saddlepoint",
    "find_vertical_pivot",
    "fitted_read_constant",
    "full_scan_strategy",
    "full_view",
    "gen_dwise",
    "gen_hard_matrix",
    "is_horizontal_pivot",
    "is_vertical_pivot",
    "lex_compare",
    "lex_less",
    "load_matrix",
    "median_reads_by_n",
    "mix64",
    "nosaddle_matrix",
    "planted_matrix",
    "preset_params",
    "rand_uniform",
    "random_probe_strategy",
    "reduce_matrix",
    "row_scan_strategy",
    "run_budget_experiment",
    "run_scaling_bench",
    "save_matrix",
    "select_kth",
    "solve_base_case",
    "solve_rectangular",
    "uniform_matrix",
    "verify_strict_candidate",
    "window_view",
]
