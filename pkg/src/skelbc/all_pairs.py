"""All-pairs betweenness by iterating over ordered pairs of parts."""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from ._pool import ordered_map
from .brandes import EPSILON, CentralityVector
from .finish import finish_centrality
from .graph import Graph
from .partition import Partition, check_partition
from .skeleton import Skeleton, SupernodeTables, build_skeleton
from .skeleton_brandes import brandes_sk


@dataclass(frozen=True)
class PairTask:
    """Paths starting in part ``i`` and ending in part ``j``."""

    i: int
    j: int


def pair_tasks(partition: Partition) -> list[PairTask]:
    return [PairTask(i, j) for i in range(partition.k) for j in range(partition.k)]


def pair_partition(partition: Partition, task: PairTask) -> Partition:
    """Split parts ``i`` and ``j`` into singletons; other parts are untouched."""
    if not (0 <= task.i < partition.k and 0 <= task.j < partition.k):
        raise ValueError(f"pair ({task.i}, {task.j}) out of range for k={partition.k}")
    split = {task.i, task.j}
    parts = [list(p) for q, p in enumerate(partition.parts) if q not in split]
    for q in sorted(split):
        parts.extend([v] for v in partition.parts[q])
    return Partition.from_parts(partition.n, parts)


def refine_pair_skeleton(
    graph: Graph,
    partition: Partition,
    task: PairTask,
    epsilon: float = EPSILON,
    cache: dict[tuple, SupernodeTables] | None = None,
) -> Skeleton:
    """Skeleton in which every node of parts ``i`` and ``j`` is its own supernode.

    Splitting a part never changes the frontier of any other part, so with a
    ``cache`` filled by the unrefined build only the new singletons are
    computed (and those are trivial).
    """
    refined = pair_partition(partition, task)
    members = list(partition.parts[task.i])
    if task.j != task.i:
        members += partition.parts[task.j]
    return build_skeleton(graph, refined, members, epsilon, cache=cache)


def _pair_job(state, task):
    graph, partition, cache, epsilon = state
    t0 = time.perf_counter()
    skeleton = refine_pair_skeleton(graph, partition, task, epsilon, dict(cache))
    t1 = time.perf_counter()
    local = skeleton.local
    sources = [s for s in partition.parts[task.i] if s in local]
    dests = [t for t in partition.parts[task.j] if t in local]
    solutions = brandes_sk(skeleton, sources, dests, epsilon)
    t2 = time.perf_counter()
    scores = finish_centrality(solutions, skeleton, dests, epsilon).scores
    t3 = time.perf_counter()
    return scores, (t1 - t0, t2 - t1, t3 - t2)


def brandes_pp_all(
    graph: Graph,
    partition: Partition,
    epsilon: float = EPSILON,
    workers: int = 1,
) -> CentralityVector:
    """Betweenness over all ordered node pairs, summed over the ``k**2`` part pairs.

    Pair results are added in ``(i, j)`` lexicographic order.
    """
    check_partition(partition, graph.n)
    t_start = time.perf_counter()
    cache: dict[tuple, SupernodeTables] = {}
    base = build_skeleton(graph, partition, (), epsilon, workers, cache=cache)
    t_base = time.perf_counter() - t_start

    scores = np.zeros(graph.n)
    phases = np.zeros(3)
    state = (graph, partition, cache, epsilon)
    for part_scores, secs in ordered_map(_pair_job, pair_tasks(partition), state, workers):
        scores += part_scores
        phases += secs
    return CentralityVector(
        scores,
        timings={
            "build_sk": max(base.build_seconds, default=0.0),
            "build_sk_total": t_base + phases[0],
            "brandes_sk": float(phases[1]),
            "finish": float(phases[2]),
            "wall": time.perf_counter() - t_start,
        },
    )
