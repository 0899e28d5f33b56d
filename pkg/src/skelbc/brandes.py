"""Exact betweenness centrality by Brandes' dependency accumulation.

The shortest-path engine here (:func:`shortest_paths` and
:func:`accumulate`) also serves the skeleton variant, which passes per-edge
path multiplicities. Path counts are floats, so counts are exact only
below 2**53.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from ._pool import ordered_map
from .graph import Graph

EPSILON = 1e-9
INF = math.inf

ORDERED = "ordered-pairs"
UNORDERED = "unordered-pairs"


@dataclass
class SourceSolution:
    """Single-source shortest-path state.

    ``preds[v]`` holds the predecessors of ``v`` on shortest paths from
    ``source``; ``pred_mult[v]`` (skeleton runs only) the multiplicity of
    each of those edges. ``order`` lists reachable nodes by settle time.
    """

    source: int
    dist: list[float]
    sigma: list[float]
    preds: list[list[int]]
    order: list[int]
    pred_mult: list[list[float]] | None = None


@dataclass
class CentralityVector:
    scores: np.ndarray
    convention: str = ORDERED
    timings: dict[str, float] = field(default_factory=dict)

    def unordered(self) -> "CentralityVector":
        if self.convention == UNORDERED:
            return self
        return CentralityVector(self.scores / 2.0, UNORDERED, dict(self.timings))

    def __len__(self) -> int:
        return len(self.scores)

    def __getitem__(self, v: int) -> float:
        return float(self.scores[v])


def shortest_paths(
    nbrs: Sequence[Sequence[int]],
    lengths: Sequence[Sequence[float]],
    source: int,
    mults: Sequence[Sequence[float]] | None = None,
    epsilon: float = EPSILON,
) -> SourceSolution:
    """Dijkstra with shortest-path counting.

    Two lengths are equal when they differ by at most ``epsilon``. With
    ``mults`` given, an edge stands for ``mults[u][i]`` parallel shortest
    paths and counts multiply along a path. Heap ties are broken by node
    index.
    """
    n = len(nbrs)
    dist = [INF] * n
    sigma = [0.0] * n
    preds: list[list[int]] = [[] for _ in range(n)]
    pmult: list[list[float]] | None = [[] for _ in range(n)] if mults is not None else None
    done = [False] * n
    order = []
    dist[source] = 0.0
    sigma[source] = 1.0
    heap = [(0.0, source)]
    push, pop = heapq.heappush, heapq.heappop

    if mults is None:
        while heap:
            d, u = pop(heap)
            if done[u]:
                continue
            done[u] = True
            order.append(u)
            su = sigma[u]
            for v, w in zip(nbrs[u], lengths[u]):
                if done[v]:
                    continue
                alt = d + w
                dv = dist[v]
                if alt < dv - epsilon:
                    dist[v] = alt
                    sigma[v] = su
                    preds[v] = [u]
                    push(heap, (alt, v))
                elif alt <= dv + epsilon:
                    sigma[v] += su
                    preds[v].append(u)
    else:
        while heap:
            d, u = pop(heap)
            if done[u]:
                continue
            done[u] = True
            order.append(u)
            su = sigma[u]
            for v, w, k in zip(nbrs[u], lengths[u], mults[u]):
                if done[v]:
                    continue
                alt = d + w
                dv = dist[v]
                if alt < dv - epsilon:
                    dist[v] = alt
                    sigma[v] = su * k
                    preds[v] = [u]
                    pmult[v] = [k]
                    push(heap, (alt, v))
                elif alt <= dv + epsilon:
                    sigma[v] += su * k
                    preds[v].append(u)
                    pmult[v].append(k)
    return SourceSolution(source, dist, sigma, preds, order, pmult)


def accumulate(sol: SourceSolution, is_dest: Sequence[float]) -> list[float]:
    """Reverse-order dependency accumulation.

    ``is_dest[v]`` is 1.0 for nodes that count as path destinations and 0.0
    otherwise. The source's own entry is zeroed (endpoints never count).
    """
    sigma, preds = sol.sigma, sol.preds
    delta = [0.0] * len(sigma)
    if sol.pred_mult is None:
        for v in reversed(sol.order):
            coeff = (is_dest[v] + delta[v]) / sigma[v]
            for u in preds[v]:
                delta[u] += sigma[u] * coeff
    else:
        pmult = sol.pred_mult
        for v in reversed(sol.order):
            coeff = (is_dest[v] + delta[v]) / sigma[v]
            for u, k in zip(preds[v], pmult[v]):
                delta[u] += k * sigma[u] * coeff
    delta[sol.source] = 0.0
    return delta


def dijkstra_sssp(graph: Graph, source: int, epsilon: float = EPSILON) -> SourceSolution:
    if not 0 <= source < graph.n:
        raise IndexError(f"source {source} out of range for n={graph.n}")
    nbrs, wts = graph.adjacency()
    return shortest_paths(nbrs, wts, source, epsilon=epsilon)


def indicator(n: int, members: Iterable[int]) -> list[float]:
    ind = [0.0] * n
    for v in members:
        ind[v] = 1.0
    return ind


def accumulate_dependencies(sol: SourceSolution, targets: Iterable[int]) -> list[float]:
    """``delta(s|v)`` summed over destinations in ``targets``."""
    return accumulate(sol, indicator(len(sol.dist), targets))


def check_targets(n: int, targets: Iterable[int]) -> list[int]:
    out = sorted(set(targets))
    if len(out) < 2:
        raise ValueError(f"need at least 2 distinct targets, got {len(out)}")
    if out[0] < 0 or out[-1] >= n:
        raise ValueError("target index out of range")
    return out


def _source_dependencies(state, s):
    graph, is_dest, epsilon = state
    nbrs, wts = graph.adjacency()
    return accumulate(shortest_paths(nbrs, wts, s, epsilon=epsilon), is_dest)


def brandes(
    graph: Graph,
    targets: Iterable[int] | None = None,
    epsilon: float = EPSILON,
    workers: int = 1,
) -> CentralityVector:
    """Betweenness over ordered target pairs (all nodes when ``targets`` is None)."""
    targets = check_targets(graph.n, range(graph.n) if targets is None else targets)
    is_dest = indicator(graph.n, targets)
    scores = np.zeros(graph.n)
    state = (graph, is_dest, epsilon)
    for delta in ordered_map(_source_dependencies, targets, state, workers):
        scores += delta
    return CentralityVector(scores)
