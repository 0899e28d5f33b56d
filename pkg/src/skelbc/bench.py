"""Baseline vs skeleton wall-clock comparison."""

from __future__ import annotations

import statistics
import time
from typing import Iterable, Mapping, TextIO

import numpy as np

from .brandes import EPSILON, brandes
from .driver import PIN, brandes_pp, target_skeleton
from .graph import Graph
from .partition import Partition

COLUMNS = (
    "partition",
    "k",
    "skeleton_nodes",
    "skeleton_edges",
    "baseline_min",
    "baseline_median",
    "build_sk",
    "build_sk_total",
    "brandes_sk",
    "finish",
    "reported",
    "wall_min",
    "wall_median",
    "speedup",
    "max_rel_diff",
)


def max_rel_diff(a: np.ndarray, b: np.ndarray) -> float:
    scale = np.maximum(np.maximum(np.abs(a), np.abs(b)), 1.0)
    return float(np.max(np.abs(a - b) / scale, initial=0.0))


def run_bench(
    graph: Graph,
    partitions: Mapping[str, Partition],
    targets: Iterable[int],
    repetitions: int = 3,
    mode: str = PIN,
    epsilon: float = EPSILON,
    workers: int = 1,
) -> list[dict]:
    """One row per partition; timings in seconds, phases as medians.

    ``reported`` is ``build_sk + brandes_sk + finish`` where ``build_sk`` is
    the slowest single supernode, i.e. the cost when supernodes are built in
    parallel. ``speedup`` compares median wall-clock times.
    """
    if repetitions < 1:
        raise ValueError("repetitions must be at least 1")
    targets = sorted(set(targets))
    base_times = []
    for _ in range(repetitions):
        t0 = time.perf_counter()
        base = brandes(graph, targets, epsilon, workers)
        base_times.append(time.perf_counter() - t0)
    base_med = statistics.median(base_times)

    rows = []
    for name, part in partitions.items():
        sk = target_skeleton(graph, part, targets, mode, epsilon)
        runs = [brandes_pp(graph, part, targets, epsilon, workers, mode) for _ in range(repetitions)]
        walls = [r.timings["wall"] for r in runs]
        phase = {
            key: statistics.median(r.timings[key] for r in runs)
            for key in ("build_sk", "build_sk_total", "brandes_sk", "finish")
        }
        wall_med = statistics.median(walls)
        rows.append(
            {
                "partition": name,
                "k": part.k,
                "skeleton_nodes": len(sk.nodes),
                "skeleton_edges": len(sk.r_edges) + len(sk.x_edges),
                "baseline_min": min(base_times),
                "baseline_median": base_med,
                **phase,
                "reported": phase["build_sk"] + phase["brandes_sk"] + phase["finish"],
                "wall_min": min(walls),
                "wall_median": wall_med,
                "speedup": base_med / wall_med if wall_med > 0 else float("inf"),
                "max_rel_diff": max_rel_diff(base.scores, runs[0].scores),
            }
        )
    return rows


def write_report(rows: list[dict], stream: TextIO) -> None:
    stream.write(",".join(COLUMNS) + "\n")
    for row in rows:
        cells = []
        for col in COLUMNS:
            val = row[col]
            cells.append(f"{val:.6g}" if isinstance(val, float) else str(val))
        stream.write(",".join(cells) + "\n")
