"""Benchmark harness: seeded run grids, stress traces, deviation reports.

Runs a grid of algorithm x initializer cells, a fixed number of
repetitions per cell (run r uses seed base_seed + r), and reports each
cell's mean final stress relative to the reference cell: majorization
started from the classical-MDS layout.  Also runs the self-initializing
variant, k steps of annealed SGD from a random layout followed by
majorization to convergence.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

import numpy as np

from .graphs import DistanceMatrix, Graph, all_pairs_shortest_paths
from .initializers import PivotConfig, classical_mds, pivot_mds, random_init
from .sgd import SgdConfig, default_schedule, run_sgd
from .smacof import SmacofConfig, run_smacof
from .stress import stress

# Per-step tolerance when checking that majorization traces never increase.
# The absolute floor masks arithmetic rounding on traces that bottom out at
# machine-noise stress (exactly realizable instances); for any stress above
# 1e-6 the relative bound alone decides.
MONOTONE_RTOL = 1e-9
MONOTONE_NOISE_FLOOR = 1e-15

TRACE_HEADER = ("graph", "algorithm", "initializer", "seed", "iteration", "stress")
REPORT_HEADER = ("graph", "algorithm", "initializer", "mean_final_stress", "deviation")


@dataclass(frozen=True)
class StressTrace:
    """Stress per iteration for one run; values[0] is the initial stress.

    For majorization runs (and the majorization phase of hybrid runs,
    starting at index phase_boundary) the values must be non-increasing;
    this is checked at construction.
    """

    run_id: str
    graph: str
    algorithm: str
    initializer: str
    seed: int
    values: tuple[float, ...]
    phase_boundary: int | None = None

    def __post_init__(self):
        if not self.values:
            raise ValueError("trace must contain at least the initial stress")
        start = None
        if self.algorithm == "smacof":
            start = 1
        elif self.algorithm == "hybrid" and self.phase_boundary is not None:
            start = self.phase_boundary
        if start is not None:
            values = self.values[start:]
            for a, b in zip(values, values[1:]):
                if b - a > max(MONOTONE_RTOL * abs(a), MONOTONE_NOISE_FLOOR):
                    raise ValueError(
                        f"majorization trace increased: {a} -> {b} in {self.run_id}"
                    )

    @property
    def final(self) -> float:
        return self.values[-1]


@dataclass(frozen=True)
class ExperimentConfig:
    """One benchmark campaign over a set of named graphs."""

    graphs: tuple[tuple[str, Graph], ...]
    algorithms: tuple[str, ...] = ("sgd", "smacof")
    initializers: tuple[str, ...] = ("random", "cmds")
    repetitions: int = 10
    base_seed: int = 0
    sgd_iterations: int = 15
    sgd_eps: float = 0.01
    smacof: SmacofConfig = field(default_factory=SmacofConfig)
    pivots: int = 100

    def __post_init__(self):
        if self.repetitions < 1:
            raise ValueError("repetitions must be positive")


@dataclass(frozen=True)
class DeviationRow:
    graph: str
    algorithm: str
    initializer: str
    mean_final_stress: float
    final_stresses: tuple[float, ...]
    deviation: float


@dataclass(frozen=True)
class DeviationReport:
    rows: tuple[DeviationRow, ...]


def run_grid(config: ExperimentConfig) -> list[StressTrace]:
    """All (graph, algorithm, initializer) cells, repetitions times each.

    Deterministic: repetition r of every cell uses seed base_seed + r, and
    cells are emitted in configuration order.
    """
    traces: list[StressTrace] = []
    for name, graph in config.graphs:
        dist = all_pairs_shortest_paths(graph)
        schedule = default_schedule(dist, config.sgd_iterations, config.sgd_eps)
        cmds_layout = classical_mds(dist) if "cmds" in config.initializers else None
        for algorithm in config.algorithms:
            for initializer in config.initializers:
                for r in range(config.repetitions):
                    seed = config.base_seed + r
                    x0 = _initial_layout(initializer, graph, dist, cmds_layout, seed, config)
                    if algorithm == "sgd":
                        _, values = run_sgd(dist, x0, SgdConfig(schedule, seed=seed))
                    elif algorithm == "smacof":
                        _, values = run_smacof(dist, x0, config.smacof)
                    else:
                        raise ValueError(f"unknown algorithm {algorithm!r}")
                    traces.append(
                        StressTrace(
                            run_id=f"{name}/{algorithm}/{initializer}/r{r}",
                            graph=name,
                            algorithm=algorithm,
                            initializer=initializer,
                            seed=seed,
                            values=tuple(values),
                        )
                    )
    return traces


def _initial_layout(initializer, graph, dist, cmds_layout, seed, config):
    if initializer == "random":
        return random_init(dist.n, seed)
    if initializer == "cmds":
        return cmds_layout
    if initializer == "pivot":
        k = min(config.pivots, graph.n)
        return pivot_mds(graph, PivotConfig(k=k, seed=seed))
    raise ValueError(f"unknown initializer {initializer!r}")


def hybrid_layout(
    dist: DistanceMatrix,
    k: int,
    sgd_config: SgdConfig,
    smacof_config: SmacofConfig,
    seed: int,
    callback=None,
):
    """Random start, k SGD iterations, then majorization to convergence.

    The SGD phase runs the first k steps of the full schedule, so for
    matching seeds it is a bit-exact prefix of a plain SGD run; with k = 0
    the result equals plain majorization from the random layout.  Returns
    (layout, values); values[:k+1] cover the SGD phase (index 0 = initial
    stress) and the majorization phase follows.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    x0 = random_init(dist.n, seed)
    if k > 0:
        cfg = SgdConfig(sgd_config.schedule, seed=seed, jitter_epsilon=sgd_config.jitter_epsilon)
        x1, sgd_values = run_sgd(dist, x0, cfg, iterations=k, callback=callback)
    else:
        x1, sgd_values = x0, [stress(x0, dist)]
    smacof_callback = None
    if callback is not None:
        smacof_callback = lambda t, layout: callback(k + t, layout)
    layout, smacof_values = run_smacof(dist, x1, smacof_config, callback=smacof_callback)
    return layout, list(sgd_values) + list(smacof_values[1:])


def run_hybrid(
    dist: DistanceMatrix,
    k: int,
    sgd_config: SgdConfig,
    smacof_config: SmacofConfig,
    seed: int,
    graph: str = "graph",
) -> StressTrace:
    """hybrid_layout wrapped into a StressTrace; phase_boundary = k."""
    _, values = hybrid_layout(dist, k, sgd_config, smacof_config, seed)
    return StressTrace(
        run_id=f"{graph}/hybrid/sgd_{k}/s{seed}",
        graph=graph,
        algorithm="hybrid",
        initializer=f"sgd_{k}",
        seed=seed,
        values=tuple(values),
        phase_boundary=k,
    )


def relative_deviation(traces) -> DeviationReport:
    """Mean final stress per cell, relative to smacof x cmds on its graph.

    deviation = mean / baseline - 1; the baseline cell itself is exactly 0.
    Rows are sorted by graph, then algorithm, then initializer.
    """
    cells: dict[tuple[str, str, str], list[float]] = {}
    for trace in traces:
        key = (trace.graph, trace.algorithm, trace.initializer)
        cells.setdefault(key, []).append(trace.final)
    baselines: dict[str, float] = {}
    for (graph, algorithm, initializer), finals in cells.items():
        if algorithm == "smacof" and initializer == "cmds":
            baselines[graph] = float(np.mean(finals))
    rows = []
    for key in sorted(cells):
        graph, algorithm, initializer = key
        if graph not in baselines:
            raise ValueError(f"missing smacof x cmds baseline cell for graph {graph!r}")
        finals = cells[key]
        mean = float(np.mean(finals))
        rows.append(
            DeviationRow(
                graph=graph,
                algorithm=algorithm,
                initializer=initializer,
                mean_final_stress=mean,
                final_stresses=tuple(finals),
                deviation=mean / baselines[graph] - 1.0,
            )
        )
    return DeviationReport(rows=tuple(rows))


def export_csv(obj, destination) -> None:
    """Write traces or a deviation report as CSV.

    Traces expand to one row per recorded stress value (iteration 0 is the
    initial stress); reports get one row per cell.  Floats are rendered
    with full round-trip precision and rows come out in deterministic
    order, so identical inputs give identical bytes.
    """
    if isinstance(obj, DeviationReport):
        header = REPORT_HEADER
        rows = [
            (row.graph, row.algorithm, row.initializer,
             repr(row.mean_final_stress), repr(row.deviation))
            for row in obj.rows
        ]
    else:
        header = TRACE_HEADER
        rows = [
            (t.graph, t.algorithm, t.initializer, str(t.seed), str(i), repr(v))
            for t in obj
            for i, v in enumerate(t.values)
        ]
    if hasattr(destination, "write"):
        _write_rows(destination, header, rows)
    else:
        with open(destination, "w", newline="") as handle:
            _write_rows(handle, header, rows)


def _write_rows(handle, header, rows) -> None:
    writer = csv.writer(handle, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def parse_traces_csv(source) -> list[StressTrace]:
    """Inverse of export_csv for trace files (used by tests and scripts)."""
    if hasattr(source, "read"):
        text = source.read()
    else:
        with open(source, "r", newline="") as handle:
            text = handle.read()
    reader = csv.reader(io.StringIO(text))
    header = tuple(next(reader))
    if header != TRACE_HEADER:
        raise ValueError(f"unexpected trace header {header!r}")
    grouped: dict[tuple[str, str, str, int], list[float]] = {}
    for graph, algorithm, initializer, seed, _, value in reader:
        key = (graph, algorithm, initializer, int(seed))
        grouped.setdefault(key, []).append(float(value))
    return [
        StressTrace(
            run_id=f"{graph}/{algorithm}/{initializer}/s{seed}",
            graph=graph,
            algorithm=algorithm,
            initializer=initializer,
            seed=seed,
            values=tuple(values),
            # the phase boundary is not part of the CSV schema
            phase_boundary=None,
        )
        for (graph, algorithm, initializer, seed), values in grouped.items()
    ]
