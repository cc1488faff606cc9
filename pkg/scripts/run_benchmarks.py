#!/usr/bin/env python3
"""Run the full algorithm x initializer comparison and write CSV results.

Covers every synthetic default instance plus any benchmark matrices found
under tests/data/ (see fetch_benchmarks.py).  Produces:

    results/traces.csv   one row per (run, iteration)
    results/report.csv   mean final stress and deviation per cell

and prints the report.  Everything is seeded; rerunning reproduces the
files byte for byte.
"""

import argparse
import sys
from pathlib import Path

from stresslayout import ExperimentConfig, export_csv, relative_deviation, run_grid
from stresslayout.cli import load_graph

REPO = Path(__file__).resolve().parent.parent
DEFAULT_SPECS = ["path:100", "cycle:100", "grid:10,10", "grid:2,50"]


def gather_graphs(specs):
    graphs = []
    for spec in specs:
        graphs.append(load_graph(spec))
    for fixture in sorted((REPO / "tests" / "data").glob("*.mtx")):
        graphs.append(load_graph(str(fixture)))
    return tuple(graphs)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--specs", nargs="*", default=DEFAULT_SPECS,
                        help="graph files or synthetic specs")
    parser.add_argument("--reps", type=int, default=10)
    parser.add_argument("--base-seed", type=int, default=0)
    parser.add_argument("--results", default=str(REPO / "results"))
    args = parser.parse_args()

    graphs = gather_graphs(args.specs)
    print(f"instances: {', '.join(name for name, _ in graphs)}")
    config = ExperimentConfig(graphs=graphs, repetitions=args.reps,
                              base_seed=args.base_seed)
    traces = run_grid(config)
    report = relative_deviation(traces)

    results = Path(args.results)
    results.mkdir(parents=True, exist_ok=True)
    export_csv(traces, results / "traces.csv")
    export_csv(report, results / "report.csv")

    print(f"\n{'graph':<12} {'algorithm':<8} {'init':<8} {'mean stress':>14} {'deviation':>10}")
    for row in report.rows:
        print(f"{row.graph:<12} {row.algorithm:<8} {row.initializer:<8} "
              f"{row.mean_final_stress:>14.4f} {row.deviation:>+9.2%}")
    print(f"\nwrote {results / 'traces.csv'} and {results / 'report.csv'}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
