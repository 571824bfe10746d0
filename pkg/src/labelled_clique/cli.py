"""Command line front end: solve one instance, verify a witness, run benchmarks.

Reports are line-oriented ``key: value`` pairs with a stable key set, plus
an opt-in JSON mirror, so runs stay easy to script.  Exit codes: 0 success,
1 bad arguments, 2 input parse error, 3 internal validation failure (a
solver witness failed its re-check), 4 verify rejected the witness.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import asdict, dataclass
from pathlib import Path

from .graph import GraphError, LabelledGraph, clique_cost, label_indices
from .graph_io import InstanceSpec, ParseError, parse_dimacs, parse_labels, random_labels, resolve_budget
from .parallel import solve_parallel
from .sequential import Solution, solve

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_INTERNAL = 3
EXIT_BAD_WITNESS = 4


@dataclass
class RunReport:
    """Everything one solve run reports, witness re-validated before emission."""

    instance: str
    n: int
    m: int
    num_labels: int
    budget: int
    threads: int
    seed: int | None
    label_file: str | None
    size: int
    cost: int
    witness: list[int]
    witness_labels: list[int]
    nodes_pass1: int
    nodes_pass2: int
    elapsed_s: float

    def lines(self) -> list[str]:
        return [
            f"instance: {self.instance}",
            f"n: {self.n}",
            f"m: {self.m}",
            f"num_labels: {self.num_labels}",
            f"budget: {self.budget}",
            f"threads: {self.threads}",
            f"seed: {'-' if self.seed is None else self.seed}",
            f"label_file: {self.label_file or '-'}",
            f"size: {self.size}",
            f"cost: {self.cost}",
            "witness: " + " ".join(str(v) for v in self.witness),
            "witness_labels: " + " ".join(str(k) for k in self.witness_labels),
            f"nodes_pass1: {self.nodes_pass1}",
            f"nodes_pass2: {self.nodes_pass2}",
            f"elapsed_s: {self.elapsed_s:.6f}",
        ]


def _check_witness(lg: LabelledGraph, budget: int, solution: Solution) -> str | None:
    """Re-validate a solver result against the original graph; None when sound."""
    clique = solution.clique
    if len(set(clique)) != len(clique) or len(clique) != solution.size:
        return "witness size mismatch"
    try:
        labels, cost = clique_cost(lg, clique)
    except GraphError as exc:
        return str(exc)
    if labels != solution.labels or cost != solution.cost:
        return "witness labels do not match reported labels"
    if cost > budget:
        return f"witness cost {cost} exceeds budget {budget}"
    return None


def _run_one(lg: LabelledGraph, budget: int, threads: int) -> Solution:
    if threads == 1:
        return solve(lg, budget)
    return solve_parallel(lg, budget, workers=threads)


def _cmd_solve(args: argparse.Namespace) -> int:
    spec = InstanceSpec(
        graph_path=Path(args.graph),
        num_labels=args.labels,
        seed=args.seed,
        label_file=Path(args.label_file) if args.label_file else None,
        budget=args.budget,
        budget_pct=args.budget_pct,
    )
    lg, budget = spec.load()
    threads = args.threads if args.threads is not None else (os.cpu_count() or 1)
    if threads < 1:
        raise ValueError(f"threads must be >= 1, got {threads}")
    solution = _run_one(lg, budget, threads)
    problem = _check_witness(lg, budget, solution)
    if problem is not None:
        print(f"internal validation failure: {problem}", file=sys.stderr)
        return EXIT_INTERNAL
    report = RunReport(
        instance=Path(args.graph).stem,
        n=lg.graph.n,
        m=lg.graph.edge_count(),
        num_labels=lg.num_labels,
        budget=budget,
        threads=threads,
        seed=None if args.label_file else spec.seed,
        label_file=args.label_file,
        size=solution.size,
        cost=solution.cost,
        witness=[v + 1 for v in solution.clique],
        witness_labels=[k + 1 for k in label_indices(solution.labels)],
        nodes_pass1=solution.stats.nodes_pass1,
        nodes_pass2=solution.stats.nodes_pass2,
        elapsed_s=solution.stats.elapsed,
    )
    for line in report.lines():
        print(line)
    if args.json:
        print(json.dumps(asdict(report)))
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    if (args.labels is None) == (args.label_file is None):
        raise ValueError("exactly one label source: --labels or --label-file")
    graph = parse_dimacs(Path(args.graph).read_text())
    if args.label_file:
        lg = parse_labels(Path(args.label_file).read_text(), graph)
    else:
        lg = random_labels(graph, args.labels, args.seed if args.seed is not None else 0)
    budget = resolve_budget(lg.num_labels, args.budget, args.budget_pct)
    witness = args.witness
    seen = set()
    for v in witness:
        if not 1 <= v <= graph.n:
            print(f"vertex {v} out of range 1..{graph.n}")
            return EXIT_BAD_WITNESS
        if v in seen:
            print(f"vertex {v} listed twice")
            return EXIT_BAD_WITNESS
        seen.add(v)
    zero_based = sorted(v - 1 for v in witness)
    for i, u in enumerate(zero_based):
        for v in zero_based[i + 1 :]:
            if not graph.adjacent(u, v):
                print(f"vertices {u + 1} and {v + 1} are not adjacent")
                return EXIT_BAD_WITNESS
    labels, cost = clique_cost(lg, zero_based)
    print(f"size: {len(zero_based)}")
    print(f"cost: {cost}")
    print("labels: " + " ".join(str(k + 1) for k in label_indices(labels)))
    if cost > budget:
        print(f"cost {cost} exceeds budget {budget}")
        return EXIT_BAD_WITNESS
    return EXIT_OK


def _cmd_bench(args: argparse.Namespace) -> int:
    """Seeded benchmark rows: per-sample labels, sequential and parallel runs.

    Sample ``i`` uses seed ``base + i``.  Solve times cover permutation and
    thread startup but not file reading or label generation; the size/cost
    columns are bit-reproducible for a fixed base seed.
    """
    if (args.labels is None) == (args.label_file is None):
        raise ValueError("exactly one label source: --labels or --label-file")
    threads = args.threads if args.threads is not None else (os.cpu_count() or 1)
    if threads < 1:
        raise ValueError(f"threads must be >= 1, got {threads}")
    print("instance labels pct budget size cost t_seq t_par")
    for path in args.graphs:
        graph = parse_dimacs(Path(path).read_text())
        name = Path(path).stem
        fixed = parse_labels(Path(args.label_file).read_text(), graph) if args.label_file else None
        label_counts = [fixed.num_labels] if fixed else args.labels
        for num_labels in label_counts:
            for pct in args.budget_pct:
                budget = resolve_budget(num_labels, budget_pct=pct)
                sum_size = sum_cost = 0
                sum_seq = sum_par = 0.0
                for sample in range(args.samples):
                    seed = args.seed + sample
                    lg = fixed if fixed else random_labels(graph, num_labels, seed)
                    seq = solve(lg, budget)
                    par = solve_parallel(lg, budget, workers=threads)
                    for solution in (seq, par):
                        problem = _check_witness(lg, budget, solution)
                        if problem is not None:
                            print(f"internal validation failure: {problem}", file=sys.stderr)
                            return EXIT_INTERNAL
                    sum_size += seq.size
                    sum_cost += seq.cost
                    sum_seq += seq.stats.elapsed
                    sum_par += par.stats.elapsed
                k = args.samples
                print(
                    f"{name} {num_labels} {pct} {budget} "
                    f"{sum_size / k:.2f} {sum_cost / k:.2f} "
                    f"{sum_seq / k:.4f} {sum_par / k:.4f}"
                )
    return EXIT_OK


def _add_label_args(sub: argparse.ArgumentParser, many: bool = False) -> None:
    if many:
        sub.add_argument("--labels", type=int, nargs="+",
                         help="label-set sizes for random allocation")
    else:
        sub.add_argument("--labels", type=int, help="label-set size for random allocation")
    sub.add_argument("--seed", type=int, default=None, help="random label seed (default 0)")
    sub.add_argument("--label-file", help="read labels from a file instead")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="labelled-clique",
        description="Maximum labelled clique solver (largest feasible clique, "
                    "cheapest among the largest)",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    solve_p = subs.add_parser("solve", help="solve one instance and report the witness")
    solve_p.add_argument("graph", help="DIMACS graph file")
    _add_label_args(solve_p)
    solve_p.add_argument("--budget", type=int, help="label budget")
    solve_p.add_argument("--budget-pct", type=int, help="budget as %% of labels (25/50/75)")
    solve_p.add_argument("--threads", type=int, default=None,
                         help="worker threads; 1 = dedicated sequential solver "
                              "(default: hardware concurrency)")
    solve_p.add_argument("--json", action="store_true", help="also print a JSON object")
    solve_p.set_defaults(func=_cmd_solve)

    verify_p = subs.add_parser("verify", help="check a claimed witness")
    verify_p.add_argument("graph", help="DIMACS graph file")
    _add_label_args(verify_p)
    verify_p.add_argument("--budget", type=int, help="label budget")
    verify_p.add_argument("--budget-pct", type=int, help="budget as %% of labels (25/50/75)")
    verify_p.add_argument("--witness", type=int, nargs="+", required=True,
                          help="claimed clique, 1-based vertices")
    verify_p.set_defaults(func=_cmd_verify)

    bench_p = subs.add_parser("bench", help="seeded benchmark over label sizes and budgets")
    bench_p.add_argument("graphs", nargs="+", help="DIMACS graph files")
    _add_label_args(bench_p, many=True)
    bench_p.add_argument("--budget-pct", type=int, nargs="+", default=[25, 50, 75],
                         help="budget percentages (default: 25 50 75)")
    bench_p.add_argument("--samples", type=int, default=100, help="samples per row (default 100)")
    bench_p.add_argument("--threads", type=int, default=None,
                         help="worker threads for the parallel column")
    bench_p.set_defaults(func=_cmd_bench)
    bench_p.set_defaults(seed=0)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    if getattr(args, "seed", None) is None:
        args.seed = 0 if getattr(args, "labels", None) is not None else None
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except GraphError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())
