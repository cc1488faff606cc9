"""Command-line front end: lay out graphs, run benchmark grids, render SVG.

Exit codes: 0 success, 1 malformed input, 2 disconnected input under
--strict (or usage errors from argparse), 3 I/O failure.

Inputs are files (.mtx Matrix Market, anything else edge list, override
with --format) or synthetic specifiers like ``path:100``, ``cycle:100``,
``grid:10,10``, ``complete:12``.
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from .bench import (
    ExperimentConfig,
    StressTrace,
    export_csv,
    hybrid_layout,
    relative_deviation,
    run_grid,
    run_hybrid,
)
from .graphs import (
    DisconnectedGraphError,
    Graph,
    GraphFormatError,
    all_pairs_shortest_paths,
    connected_components,
    generate,
    largest_connected_component,
    parse_edge_list,
    parse_matrix_market,
)
from .initializers import PivotConfig, classical_mds, pivot_mds, random_init
from .sgd import SgdConfig, default_schedule, run_sgd
from .smacof import SmacofConfig, run_smacof
from .svg import render_svg

_SYNTHETIC = re.compile(r"^(path|cycle|grid|complete):(\d+(?:,\d+)*)$")


class _StrictDisconnected(Exception):
    pass


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GraphFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except _StrictDisconnected as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, DisconnectedGraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stresslayout",
        description="Distance-based graph layout by annealed per-pair SGD and "
        "localized majorization, with a benchmarking harness.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    layout = sub.add_parser("layout", help="lay out one graph, write SVG and stress trace")
    _add_input_options(layout)
    layout.add_argument("--alg", choices=("sgd", "smacof", "hybrid"), default="sgd",
                        help="optimizer (default: sgd)")
    layout.add_argument("--init", choices=("random", "cmds", "pivot"), default="random",
                        help="initial layout (default: random)")
    layout.add_argument("--seed", type=int, default=0, help="run seed (default: 0)")
    layout.add_argument("--iters", type=int, default=None,
                        help="SGD iterations / majorization iteration cap")
    layout.add_argument("--eps", type=float, default=0.01,
                        help="final relative step of the SGD schedule (default: 0.01)")
    layout.add_argument("--pivots", type=int, default=100,
                        help="pivot count for --init pivot (default: 100)")
    layout.add_argument("--sgd-k", type=int, default=7,
                        help="SGD iterations before majorization for --alg hybrid (default: 7)")
    layout.add_argument("--snapshots", default=None,
                        help="comma-separated iteration numbers to snapshot as SVG")
    layout.add_argument("--out", default=None, help="output SVG path")
    layout.add_argument("--trace", default=None, help="output trace CSV path")
    layout.set_defaults(func=cmd_layout)

    bench = sub.add_parser("bench", help="run the algorithm x initializer grid, report deviations")
    bench.add_argument("inputs", nargs="+", help="graph files or synthetic specs")
    _add_input_flags(bench)
    bench.add_argument("--reps", type=int, default=10, help="runs per cell (default: 10)")
    bench.add_argument("--base-seed", type=int, default=0,
                       help="run r uses seed base+r (default: 0)")
    bench.add_argument("--iters", type=int, default=15, help="SGD iterations (default: 15)")
    bench.add_argument("--eps", type=float, default=0.01,
                       help="final relative SGD step (default: 0.01)")
    bench.add_argument("--algs", default="sgd,smacof", help="algorithms (default: sgd,smacof)")
    bench.add_argument("--inits", default="random,cmds",
                       help="initializers (default: random,cmds)")
    bench.add_argument("--out", default=None, help="report CSV path (default: stdout)")
    bench.add_argument("--trace", default=None, help="full traces CSV path")
    bench.set_defaults(func=cmd_bench)

    hybrid = sub.add_parser("hybrid", help="self-initialization sweep: k SGD steps then majorization")
    _add_input_options(hybrid)
    hybrid.add_argument("--ks", default="0,1,3,7,15",
                        help="comma-separated SGD iteration counts (default: 0,1,3,7,15)")
    hybrid.add_argument("--reps", type=int, default=10, help="runs per cell (default: 10)")
    hybrid.add_argument("--base-seed", type=int, default=0,
                        help="run r uses seed base+r (default: 0)")
    hybrid.add_argument("--iters", type=int, default=15, help="SGD schedule length (default: 15)")
    hybrid.add_argument("--eps", type=float, default=0.01,
                        help="final relative SGD step (default: 0.01)")
    hybrid.add_argument("--out", default=None, help="report CSV path (default: stdout)")
    hybrid.add_argument("--trace", default=None, help="full traces CSV path")
    hybrid.set_defaults(func=cmd_hybrid)

    info = sub.add_parser("info", help="print graph statistics")
    _add_input_options(info)
    info.set_defaults(func=cmd_info)
    return parser


def _add_input_flags(parser) -> None:
    parser.add_argument("--format", choices=("mtx", "edges"), default=None,
                        help="input format override (default: by extension)")
    parser.add_argument("--strict", action="store_true",
                        help="fail on disconnected input instead of reducing")


def _add_input_options(parser) -> None:
    parser.add_argument("input", help="graph file or synthetic spec like grid:10,10")
    _add_input_flags(parser)


def load_graph(spec: str, fmt: str | None = None) -> tuple[str, Graph]:
    """Load a graph from a file path or synthetic specifier."""
    match = _SYNTHETIC.match(spec)
    if match:
        family, sizes = match.group(1), [int(s) for s in match.group(2).split(",")]
        name = f"{family}_" + "x".join(str(s) for s in sizes)
        return name, generate(family, *sizes)
    path = Path(spec)
    text = path.read_text()
    if fmt is None:
        fmt = "mtx" if path.suffix.lower() == ".mtx" else "edges"
    graph = parse_matrix_market(text) if fmt == "mtx" else parse_edge_list(text)
    return path.stem, graph


def _load_connected(spec: str, fmt: str | None, strict: bool) -> tuple[str, Graph]:
    """Load and, if necessary, reduce to the largest connected component."""
    name, graph = load_graph(spec, fmt)
    if graph.n == 0:
        raise ValueError(f"{spec}: graph has no vertices")
    components = connected_components(graph)
    if len(components) > 1:
        if strict:
            raise _StrictDisconnected(
                f"{spec}: graph has {len(components)} components (strict mode)"
            )
        reduced = largest_connected_component(graph)
        print(
            f"warning: {spec} has {len(components)} components; "
            f"using largest with {reduced.n} of {graph.n} vertices",
            file=sys.stderr,
        )
        graph = reduced
    return name, graph


def _initial(init: str, graph, dist, seed: int, pivots: int):
    if init == "random":
        return random_init(dist.n, seed)
    if init == "cmds":
        return classical_mds(dist)
    return pivot_mds(graph, PivotConfig(k=min(pivots, graph.n), seed=seed))


def cmd_layout(args) -> int:
    name, graph = _load_connected(args.input, args.format, args.strict)
    dist = all_pairs_shortest_paths(graph)
    out_path = Path(args.out) if args.out else Path(f"{name}.svg")
    trace_path = Path(args.trace) if args.trace else Path(f"{name}.trace.csv")
    snapshots = set()
    if args.snapshots:
        snapshots = {int(tok) for tok in args.snapshots.split(",") if tok}

    def snapshot(t, coords):
        if t in snapshots:
            target = out_path.with_name(f"{out_path.stem}.iter{t}{out_path.suffix}")
            render_svg(coords, graph, target)

    callback = snapshot if snapshots else None
    schedule = default_schedule(dist, args.iters or 15, args.eps)
    if args.alg == "sgd":
        layout, values = run_sgd(
            dist,
            _initial(args.init, graph, dist, args.seed, args.pivots),
            SgdConfig(schedule, seed=args.seed),
            callback=callback,
        )
        initializer = args.init
    elif args.alg == "smacof":
        layout, values = run_smacof(
            dist,
            _initial(args.init, graph, dist, args.seed, args.pivots),
            SmacofConfig(max_iterations=args.iters or 500),
            callback=callback,
        )
        initializer = args.init
    else:
        layout, values = hybrid_layout(
            dist, args.sgd_k, SgdConfig(schedule, seed=args.seed),
            SmacofConfig(), args.seed, callback=callback,
        )
        initializer = f"sgd_{args.sgd_k}"
    trace = StressTrace(
        run_id=f"{name}/{args.alg}/{initializer}/s{args.seed}",
        graph=name,
        algorithm=args.alg,
        initializer=initializer,
        seed=args.seed,
        values=tuple(values),
        phase_boundary=args.sgd_k if args.alg == "hybrid" else None,
    )
    render_svg(layout, graph, out_path)
    export_csv([trace], trace_path)
    print(f"{name}: final stress {trace.final!r} after {len(values) - 1} iterations")
    print(f"wrote {out_path} and {trace_path}")
    return 0


def cmd_bench(args) -> int:
    graphs = tuple(
        _load_connected(spec, args.format, args.strict) for spec in args.inputs
    )
    config = ExperimentConfig(
        graphs=graphs,
        algorithms=tuple(args.algs.split(",")),
        initializers=tuple(args.inits.split(",")),
        repetitions=args.reps,
        base_seed=args.base_seed,
        sgd_iterations=args.iters,
        sgd_eps=args.eps,
    )
    traces = run_grid(config)
    report = relative_deviation(traces)
    if args.trace:
        export_csv(traces, args.trace)
    if args.out:
        export_csv(report, args.out)
    else:
        export_csv(report, sys.stdout)
    return 0


def cmd_hybrid(args) -> int:
    name, graph = _load_connected(args.input, args.format, args.strict)
    dist = all_pairs_shortest_paths(graph)
    schedule = default_schedule(dist, args.iters, args.eps)
    ks = [int(tok) for tok in args.ks.split(",") if tok]
    traces = run_grid(
        ExperimentConfig(
            graphs=((name, graph),),
            algorithms=("smacof",),
            initializers=("cmds", "random"),
            repetitions=args.reps,
            base_seed=args.base_seed,
            sgd_iterations=args.iters,
            sgd_eps=args.eps,
        )
    )
    for k in ks:
        for r in range(args.reps):
            seed = args.base_seed + r
            traces.append(
                run_hybrid(dist, k, SgdConfig(schedule, seed=seed), SmacofConfig(),
                           seed, graph=name)
            )
    report = relative_deviation(traces)
    if args.trace:
        export_csv(traces, args.trace)
    if args.out:
        export_csv(report, args.out)
    else:
        export_csv(report, sys.stdout)
    return 0


def cmd_info(args) -> int:
    name, graph = load_graph(args.input, args.format)
    components = connected_components(graph)
    print(f"graph: {name}")
    print(f"vertices: {graph.n}")
    print(f"edges: {graph.m}")
    print(f"components: {len(components)}")
    if graph.n == 0:
        return 0
    largest = largest_connected_component(graph)
    print(f"largest component: {largest.n} vertices, {largest.m} edges")
    if largest.n >= 2:
        dist = all_pairs_shortest_paths(largest)
        print(f"diameter (largest component): {int(dist.matrix.max())}")
        degrees = [largest.degree(i) for i in range(largest.n)]
        print(f"degree range: {min(degrees)}..{max(degrees)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
