"""Command-line front end: generate / solve / oracle / bench / lb.

Matrix files are plain ASCII, whitespace-separated decimal int64 tokens:
``m n`` followed by the m*n entries in row-major order. Planted and hard
instances get a ``<name>.truth.json`` sidecar with their ground truth so
downstream checks never re-derive it from the solver under test.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import json
import sys

from .bench import doubling_sizes, fitted_read_constant, median_reads_by_n, run_scaling_bench
from .generators import nosaddle_matrix, planted_matrix, uniform_matrix
from .hardlab import STRATEGIES, gen_hard_matrix, run_budget_experiment
from .matrix import Matrix, ParseError, load_matrix, save_matrix
from .oracles import brute_nonstrict, brute_strict
from .randomness import create_pool
from .solver import SolveParams, find_strict_saddlepoint, preset_params, verify_strict_candidate

_PIVOT_FLAGS = {
    "phase1_quantile": float,
    "stop_exponent": float,
    "sample_exponent": float,
    "sample_floor": int,
    "sample_log_factor": float,
    "order_fraction": float,
    "validity_fraction": float,
}


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=0, help="master seed (64-bit)")
    p.add_argument("--preset", choices=("paper", "practical"), default="practical")
    p.add_argument("--rng", choices=("full", "dwise"), default="full")
    p.add_argument("--dwise-d", type=int, default=8, metavar="D",
                   help="independence degree for --rng dwise (even, >= 2)")
    for name, typ in _PIVOT_FLAGS.items():
        p.add_argument(f"--pivot-{name.replace('_', '-')}", type=typ, default=None,
                       dest=f"pivot_{name}", metavar="X")


def _params_from(args) -> SolveParams:
    params = preset_params(args.preset, args.rng, args.dwise_d)
    overrides = {
        name: getattr(args, f"pivot_{name}")
        for name in _PIVOT_FLAGS
        if getattr(args, f"pivot_{name}") is not None
    }
    if overrides:
        params = dataclasses.replace(
            params, pivot=dataclasses.replace(params.pivot, **overrides)
        )
    return params


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sp", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write an instance file (+ truth sidecar)")
    g.add_argument("--kind", choices=("planted", "uniform", "nosaddle", "hard"), required=True)
    g.add_argument("--rows", type=int, required=True)
    g.add_argument("--cols", type=int, default=None, help="defaults to --rows")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", required=True)

    s = sub.add_parser("solve", help="find the strict saddlepoint of a matrix file")
    s.add_argument("--in", dest="infile", required=True)
    s.add_argument("--json", action="store_true", help="print the full JSON report")
    _add_common(s)

    o = sub.add_parser("oracle", help="brute-force saddlepoint scan")
    o.add_argument("--in", dest="infile", required=True)
    o.add_argument("--mode", choices=("strict", "nonstrict"), default="strict")

    b = sub.add_parser("bench", help="scaling benchmark on planted instances")
    b.add_argument("--min-n", type=int, default=4096)
    b.add_argument("--max-n", type=int, default=65536)
    b.add_argument("--trials", type=int, default=11)
    b.add_argument("--csv", default=None, help="write per-trial rows here")
    _add_common(b)

    lb = sub.add_parser("lb", help="budgeted-query experiment on the hard distribution")
    lb.add_argument("--n", type=int, default=200)
    lb.add_argument("--trials", type=int, default=1000)
    lb.add_argument("--budget-divisor", type=int, default=1000)
    lb.add_argument("--strategy", choices=sorted(STRATEGIES), default="rowscan")
    lb.add_argument("--seed", type=int, default=0)
    lb.add_argument("--csv", default=None)
    return ap


def _cmd_generate(args) -> int:
    rows = args.rows
    cols = args.cols if args.cols is not None else rows
    if rows < 1 or cols < 1:
        print(f"sp generate: dimensions must be >= 1, got {rows}x{cols}", file=sys.stderr)
        return 2
    truth = None
    if args.kind == "planted":
        inst = planted_matrix(rows, cols, args.seed)
        matrix = Matrix(inst.to_array())
        truth = {
            "kind": "planted",
            "rows": rows,
            "cols": cols,
            "seed": args.seed,
            "row": inst.plant_row,
            "col": inst.plant_col,
            "value": inst.plant_value,
        }
    elif args.kind == "uniform":
        matrix = uniform_matrix(rows, cols, args.seed)
    elif args.kind == "nosaddle":
        matrix = nosaddle_matrix(rows, cols, args.seed)
    else:  # hard
        if rows != cols:
            print("sp generate: hard instances are square; --cols must equal --rows",
                  file=sys.stderr)
            return 2
        inst = gen_hard_matrix(rows, create_pool(args.seed, max(rows, 2)))
        matrix = inst.matrix
        truth = {
            "kind": "hard",
            "rows": rows,
            "cols": cols,
            "seed": args.seed,
            "t_row": inst.t_row,
            "t_col": inst.t_col,
            "t_value": inst.t_value,
            "special_cols": inst.special_cols,
        }
    with open(args.out, "w") as fh:
        save_matrix(matrix, fh)
    if truth is not None:
        with open(args.out + ".truth.json", "w") as fh:
            json.dump(truth, fh, indent=2)
            fh.write("\n")
    print(f"wrote {args.kind} {rows}x{cols} to {args.out}")
    return 0


def _cmd_solve(args) -> int:
    with open(args.infile) as fh:
        matrix = load_matrix(fh)
    params = _params_from(args)
    report = find_strict_saddlepoint(matrix, params, args.seed)
    if report.outcome == "found":
        # Belt and braces: re-check the printed answer against the input.
        if not verify_strict_candidate(matrix, report.row, report.col):
            print("sp solve: internal defect: reported cell fails verification",
                  file=sys.stderr)
            return 3
    if args.json:
        print(report.to_json())
    elif report.outcome == "found":
        print(f"found strict saddlepoint {report.value} at "
              f"({report.row}, {report.col}) "
              f"[reads={report.entry_reads} comparisons={report.comparisons} "
              f"restarts={report.restarts}]")
    else:
        print(f"no strict saddlepoint "
              f"[reads={report.entry_reads} comparisons={report.comparisons} "
              f"restarts={report.restarts}]")
    return 0


def _cmd_oracle(args) -> int:
    with open(args.infile) as fh:
        matrix = load_matrix(fh)
    res = brute_strict(matrix) if args.mode == "strict" else brute_nonstrict(matrix)
    print(json.dumps({
        "mode": args.mode,
        "cells": [{"row": r, "col": c, "value": v} for r, c, v in res.cells],
    }, separators=(", ", ": ")))
    return 0


def _cmd_bench(args) -> int:
    params = _params_from(args)
    sizes = doubling_sizes(args.min_n, args.max_n)
    if not sizes or args.trials < 1:
        print("sp bench: need min-n <= max-n and trials >= 1", file=sys.stderr)
        return 2
    rows = run_scaling_bench(sizes, args.trials, params, args.seed)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["n", "seed", "comparisons", "entry_reads", "restarts",
                        "time_ns", "found"])
            for r in rows:
                w.writerow([r.n, r.seed, r.comparisons, r.entry_reads, r.restarts,
                            r.time_ns, int(r.found)])
    medians = median_reads_by_n(rows)
    prev = None
    for n, med in medians.items():
        ratio = f"  x{med / prev:.2f}" if prev else ""
        print(f"n={n:>7}  median entry reads {med:>12.0f}  ({med / n:6.1f} per n){ratio}")
        prev = med
    print(f"fitted constant C = {fitted_read_constant(rows):.1f} (entry reads <= C*n)")
    return 0


def _cmd_lb(args) -> int:
    record = run_budget_experiment(
        STRATEGIES[args.strategy],
        args.n,
        args.trials,
        args.budget_divisor,
        seed=args.seed,
    )
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["n", "trial", "budget", "reads", "answer", "truth", "success"])
            for row in record.rows:
                w.writerow([record.n, row.trial, row.budget, row.reads, row.answer,
                            row.truth, int(row.success)])
    print(f"strategy={args.strategy} n={record.n} trials={record.trials} "
          f"budget={record.budget}")
    print(f"success rate {record.success_rate:.3f}  mean reads {record.mean_reads:.1f}")
    print(f"read histogram {record.histogram}")
    return 0


_DISPATCH = {
    "generate": _cmd_generate,
    "solve": _cmd_solve,
    "oracle": _cmd_oracle,
    "bench": _cmd_bench,
    "lb": _cmd_lb,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except ParseError as e:
        print(f"sp {args.command}: parse error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"sp {args.command}: {e}", file=sys.stderr)
        return 2
    except (ValueError, RuntimeError) as e:
        print(f"sp {args.command}: {e}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
