"""Brute-force references for small graphs.

Nothing here reuses the Brandes engine: distances come from a plain
Floyd-Warshall pass and counts from explicit path enumeration or the
pairwise product rule, so a bug in the fast code cannot validate itself.
"""

from __future__ import annotations

import math
from typing import Iterable

import numpy as np

from .brandes import EPSILON, CentralityVector
from .graph import Graph

ORACLE_MAX_NODES = 200
ENUMERATE_MAX_NODES = 12


def all_pairs_distances(graph: Graph) -> np.ndarray:
    n = graph.n
    d = np.full((n, n), math.inf)
    np.fill_diagonal(d, 0.0)
    for u, v, w in graph.edges():
        d[u, v] = d[v, u] = w
    for k in range(n):
        d = np.minimum(d, d[:, k : k + 1] + d[k : k + 1, :])
    return d


def all_pairs_counts(graph: Graph, dist: np.ndarray, epsilon: float = EPSILON) -> np.ndarray:
    """Shortest-path counts for every pair, from distances alone.

    For a fixed source, nodes are processed by increasing distance and each
    count is the sum over neighbors lying one edge closer.
    """
    n = graph.n
    sigma = np.zeros((n, n))
    for s in range(n):
        sigma[s, s] = 1.0
        for v in sorted(range(n), key=lambda x: dist[s, x]):
            if v == s or math.isinf(dist[s, v]):
                continue
            total = 0.0
            for u, w in graph.neighbors(v):
                if abs(dist[s, u] + w - dist[s, v]) <= epsilon:
                    total += sigma[s, u]
            sigma[s, v] = total
    return sigma


def oracle_betweenness(
    graph: Graph, targets: Iterable[int] | None = None, epsilon: float = EPSILON
) -> CentralityVector:
    """Pairwise dependency sum over ordered target pairs.

    ``delta(s,t|v) = sigma(s,v) * sigma(v,t) / sigma(s,t)`` whenever ``v``
    lies on a shortest ``s``-``t`` path, for every ``v`` other than ``s``, ``t``.
    """
    n = graph.n
    if n > ORACLE_MAX_NODES:
        raise ValueError(f"oracle limited to {ORACLE_MAX_NODES} nodes, got {n}")
    targets = sorted(set(range(n) if targets is None else targets))
    dist = all_pairs_distances(graph)
    sigma = all_pairs_counts(graph, dist, epsilon)
    scores = np.zeros(n)
    for s in targets:
        for t in targets:
            if s == t or math.isinf(dist[s, t]):
                continue
            for v in range(n):
                if v in (s, t):
                    continue
                if abs(dist[s, v] + dist[v, t] - dist[s, t]) <= epsilon:
                    scores[v] += sigma[s, v] * sigma[v, t] / sigma[s, t]
    return CentralityVector(scores)


def enumerate_paths(
    graph: Graph, s: int, t: int, epsilon: float = EPSILON
) -> list[tuple[int, ...]]:
    """Every shortest ``s``-``t`` path, found by depth-first search.

    Simple paths are explored with a length budget equal to the shortest
    distance, so the search never needs a shortest-path routine of its own
    beyond the Floyd-Warshall bound.
    """
    if graph.n > ENUMERATE_MAX_NODES:
        raise ValueError(f"path enumeration limited to {ENUMERATE_MAX_NODES} nodes, got {graph.n}")
    best = all_pairs_distances(graph)[s, t]
    if math.isinf(best):
        return []
    if s == t:
        return [(s,)]
    found = []
    path = [s]
    on_path = {s}

    def walk(u: int, length: float) -> None:
        for v, w in graph.neighbors(u):
            if v in on_path or length + w > best + epsilon:
                continue
            path.append(v)
            if v == t:
                if abs(length + w - best) <= epsilon:
                    found.append(tuple(path))
            else:
                on_path.add(v)
                walk(v, length + w)
                on_path.discard(v)
            path.pop()

    walk(s, 0.0)
    return found
