"""Hard random instances and budgeted query experiments.

The hard distribution makes non-strict saddlepoint detection expensive for
any comparison-based strategy: start from all zeros, plant one uniformly
random 2 per row, then rewrite one uniformly chosen 2 as +1 or -1 with
equal probability. Call the rewritten entry t. If t = -1 the instance has
saddle value 0 (any other entry of t's row); if t = +1 it has saddle value
1 exactly when every row's nonzero lands in t's column, and otherwise no
saddlepoint. Until a strategy actually reads t it cannot tell the cases
apart, which is what the query budget probes.

The experiment harness measures plug-in strategies under a read budget of
floor(n^2 / budget_divisor); exceeding the budget raises BudgetExceeded
and the trial counts as a failure. No experiment here proves the lower
bound — the harness only illustrates the regime.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .matrix import Counters, Matrix
from .randomness import RandomPool, create_pool


class BudgetExceeded(Exception):
    """Raised by a BudgetedMatrix read past its budget."""


class BudgetedMatrix:
    """Entry access that stops yielding information once the budget is spent."""

    def __init__(self, matrix, budget: int):
        self.matrix = matrix
        self.budget = budget
        self.counters = Counters()
        self.exceeded = False

    @property
    def rows(self) -> int:
        return self.matrix.rows

    @property
    def cols(self) -> int:
        return self.matrix.cols

    @property
    def remaining(self) -> int:
        return self.budget - self.counters.entry_reads

    def get(self, r: int, c: int) -> int:
        if self.counters.entry_reads >= self.budget:
            self.exceeded = True
            raise BudgetExceeded(f"budget of {self.budget} reads spent")
        self.counters.entry_reads += 1
        return self.matrix.get(r, c)


@dataclass
class HardInstance:
    matrix: Matrix
    special_cols: list  # per-row column of the single nonzero entry
    t_row: int
    t_col: int
    t_value: int  # +1 or -1


def gen_hard_matrix(n: int, pool: RandomPool) -> HardInstance:
    """Draw one instance of the hard distribution from the pool.

    Draw order (documented for reproducibility): one column per row in row
    order, then the row whose 2 becomes t, then the sign (1 -> +1, 2 -> -1).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    special = [pool.uniform(n) - 1 for _ in range(n)]
    t_row = pool.uniform(n) - 1
    t_col = special[t_row]
    t_value = 1 if pool.uniform(2) == 1 else -1
    a = np.zeros((n, n), dtype=np.int64)
    for r, c in enumerate(special):
        a[r, c] = 2
    a[t_row, t_col] = t_value
    return HardInstance(Matrix(a), special, t_row, t_col, t_value)


def classify_hard_instance(inst: HardInstance):
    """Ground-truth non-strict saddle value: 0, 1 or None (needs n >= 2).

    t = -1: any zero in t's row is a saddlepoint of value 0. t = +1: t
    itself is a saddlepoint of value 1 exactly when every special element
    shares t's column; otherwise there is none.
    """
    if inst.t_value == -1:
        return 0
    if all(c == inst.t_col for c in inst.special_cols):
        return 1
    return None


# -- bundled strategies ------------------------------------------------------


def full_scan_strategy(access: BudgetedMatrix, pool: RandomPool):
    """Read everything, answer exactly. Needs budget >= n^2."""
    n = access.rows
    t_value = None
    t_col = None
    nonzero_cols = []
    for r in range(n):
        for c in range(access.cols):
            v = access.get(r, c)
            if v:
                nonzero_cols.append(c)
                if v in (1, -1):
                    t_value, t_col = v, c
    if t_value == -1:
        return 0
    if t_value == 1 and all(c == t_col for c in nonzero_cols):
        return 1
    return None


def row_scan_strategy(access: BudgetedMatrix, pool: RandomPool):
    """Scan row-major until the budget runs out, then answer from what was seen.

    Heuristic baseline: a seen t decides -1 -> 0; +1 answers 1 unless a
    special element was seen outside t's column; an unseen t answers None.
    """
    n, k = access.rows, access.cols
    t_value = None
    t_col = None
    nonzero_cols = []
    complete = True
    for r in range(n):
        for c in range(k):
            if access.remaining <= 0:
                complete = False
                break
            v = access.get(r, c)
            if v:
                nonzero_cols.append(c)
                if v in (1, -1):
                    t_value, t_col = v, c
        if not complete:
            break
    if t_value == -1:
        return 0
    if t_value == 1:
        if any(c != t_col for c in nonzero_cols):
            return None
        return 1
    return None


def random_probe_strategy(access: BudgetedMatrix, pool: RandomPool):
    """Probe uniformly random cells within budget; same answering heuristic."""
    n, k = access.rows, access.cols
    t_value = None
    t_col = None
    off_column = False
    while access.remaining > 0:
        r = pool.uniform(n) - 1
        c = pool.uniform(k) - 1
        v = access.get(r, c)
        if v in (1, -1):
            t_value, t_col = v, c
        elif v == 2 and t_col is not None and c != t_col:
            off_column = True
    if t_value == -1:
        return 0
    if t_value == 1 and not off_column:
        return 1
    return None


STRATEGIES = {
    "full": full_scan_strategy,
    "rowscan": row_scan_strategy,
    "random": random_probe_strategy,
}


@dataclass
class TrialRow:
    trial: int
    budget: int
    reads: int
    answer: str  # "0" | "1" | "none" | "exceeded"
    truth: str  # "0" | "1" | "none"
    success: bool


@dataclass
class ExperimentRecord:
    n: int
    trials: int
    budget: int
    successes: int
    mean_reads: float
    histogram: list  # 16 read-count bins over [0, budget]
    rows: list = field(default_factory=list)

    @property
    def success_rate(self) -> float:
        return self.successes / self.trials if self.trials else 0.0


def _fmt(answer) -> str:
    return "none" if answer is None else str(answer)


def run_budget_experiment(
    strategy,
    n: int,
    trials: int,
    budget_divisor: int = 1000,
    pool: RandomPool | None = None,
    seed: int = 0,
) -> ExperimentRecord:
    """Fresh instance per trial; success = declared answer matches ground
    truth without exhausting floor(n^2/budget_divisor) reads."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if pool is None:
        pool = create_pool(seed, n)
    budget = (n * n) // budget_divisor
    rows = []
    reads_list = []
    successes = 0
    for t in range(trials):
        inst = gen_hard_matrix(n, pool)
        truth = classify_hard_instance(inst)
        access = BudgetedMatrix(inst.matrix, budget)
        try:
            answer = strategy(access, pool)
            answer_str = _fmt(answer)
            success = answer == truth
        except BudgetExceeded:
            answer_str = "exceeded"
            success = False
        reads = access.counters.entry_reads
        reads_list.append(reads)
        successes += success
        rows.append(TrialRow(t, budget, reads, answer_str, _fmt(truth), success))
    hist, _ = np.histogram(reads_list, bins=16, range=(0, max(budget, 1)))
    return ExperimentRecord(
        n,
        trials,
        budget,
        successes,
        float(np.mean(reads_list)),
        [int(x) for x in hist],
        rows,
    )
