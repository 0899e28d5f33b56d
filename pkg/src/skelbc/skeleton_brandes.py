"""Brandes on the skeleton, with path counts multiplied by edge multiplicities."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from ._pool import ordered_map
from .brandes import EPSILON, SourceSolution, accumulate, shortest_paths
from .skeleton import Skeleton


@dataclass
class SkeletonSolution:
    """Per-source state over skeleton nodes (local skeleton indices).

    ``paths.sigma`` counts shortest paths of the original graph, since every
    skeleton edge contributes its multiplicity.
    """

    source: int
    paths: SourceSolution
    delta: list[float]

    @property
    def dist(self) -> list[float]:
        return self.paths.dist

    @property
    def sigma(self) -> list[float]:
        return self.paths.sigma


def _run_source(state, s):
    skeleton, is_dest, epsilon = state
    sol = shortest_paths(skeleton.nbrs, skeleton.lengths, s, skeleton.mults, epsilon)
    return SkeletonSolution(skeleton.nodes[s], sol, accumulate(sol, is_dest))


def brandes_sk(
    skeleton: Skeleton,
    sources: Iterable[int],
    dests: Iterable[int],
    epsilon: float = EPSILON,
    workers: int = 1,
) -> list[SkeletonSolution]:
    """One solution per source, in ascending source order.

    ``sources`` and ``dests`` are graph node ids and must be skeleton nodes.
    """
    local = skeleton.local
    srcs = sorted(set(sources))
    for s in srcs:
        if s not in local:
            raise ValueError(f"source {s} is not a skeleton node")
    is_dest = [0.0] * len(skeleton.nodes)
    for t in dests:
        if t not in local:
            raise ValueError(f"destination {t} is not a skeleton node")
        is_dest[local[t]] = 1.0
    state = (skeleton, is_dest, epsilon)
    return list(ordered_map(_run_source, [local[s] for s in srcs], state, workers))
