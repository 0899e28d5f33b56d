"""Back-propagate skeleton dependencies to interior (non-frontier) nodes."""

from __future__ import annotations

import math
from typing import Iterable, Sequence

import numpy as np

from .brandes import EPSILON, CentralityVector
from .skeleton import Skeleton
from .skeleton_brandes import SkeletonSolution

# sources per vectorised block; fixed so the summation order never changes
BLOCK = 64


def interior_source_values(
    sol: SkeletonSolution, skeleton: Skeleton, part: int, v: int, epsilon: float = EPSILON
) -> tuple[float, float]:
    """``(d(s, v), sigma(s, v))`` for an interior node ``v`` of ``part``.

    Every path from the source enters the part through a frontier node and
    then stays inside; minimise over that last frontier.
    """
    sn = skeleton.supernodes[part]
    tab = skeleton.tables[part]
    col = sn.interior.index(v)
    best, count = math.inf, 0.0
    legs = []
    for a, f in enumerate(sn.frontier):
        d = sol.dist[skeleton.local[f]] + tab.dist[a, col]
        legs.append((d, sol.sigma[skeleton.local[f]] * tab.sigma[a, col]))
        best = min(best, d)
    if math.isinf(best):
        return math.inf, 0.0
    for d, c in legs:
        if d <= best + epsilon:
            count += c
    return best, count


def _interior_block(
    tab_d: np.ndarray,
    tab_s: np.ndarray,
    d_sk: np.ndarray,
    s_sk: np.ndarray,
    weight: np.ndarray,
    epsilon: float,
) -> np.ndarray:
    """Dependencies of interior nodes for a block of sources.

    ``d_sk``, ``s_sk``, ``weight`` are ``(sources, frontier)``; ``weight`` is
    ``indicator(f is a destination) + delta(s|f)``. Returns ``(sources,
    interior)`` dependencies.
    """
    with np.errstate(invalid="ignore", divide="ignore"):
        via = d_sk[:, :, None] + tab_d[None, :, :]
        d_sv = via.min(axis=1)
        reach = np.isfinite(d_sv)
        enters = (via <= d_sv[:, None, :] + epsilon) & reach[:, None, :]
        sigma_sv = np.where(enters, s_sk[:, :, None] * tab_s[None, :, :], 0.0).sum(axis=1)

        # f follows v on a shortest s-f path
        gap = d_sv[:, None, :] + tab_d[None, :, :] - d_sk[:, :, None]
        succ = (np.abs(gap) <= epsilon) & np.isfinite(gap)
        ratio = np.where(succ, tab_s[None, :, :] * (weight / s_sk)[:, :, None], 0.0)
        return sigma_sv * ratio.sum(axis=1)


def finish_centrality(
    solutions: Sequence[SkeletonSolution],
    skeleton: Skeleton,
    dests: Iterable[int],
    epsilon: float = EPSILON,
) -> CentralityVector:
    """Sum dependencies over ``solutions`` for every node of the graph.

    Frontier nodes take their skeleton dependency directly; interior nodes
    are reconstructed from the interior tables.
    """
    n = skeleton.graph.n
    scores = np.zeros(n)
    if not solutions:
        return CentralityVector(scores)
    is_dest = np.zeros(n)
    is_dest[list(dests)] = 1.0

    sk_nodes = np.asarray(skeleton.nodes, dtype=np.intp)
    dist = np.asarray([s.dist for s in solutions])
    sigma = np.asarray([s.sigma for s in solutions])
    delta = np.asarray([s.delta for s in solutions])
    scores[sk_nodes] += delta.sum(axis=0)

    for sn, tab in zip(skeleton.supernodes, skeleton.tables):
        if not sn.interior or not sn.frontier:
            continue
        cols = np.asarray([skeleton.local[f] for f in sn.frontier], dtype=np.intp)
        ind = is_dest[np.asarray(sn.frontier, dtype=np.intp)]
        acc = np.zeros(len(sn.interior))
        for lo in range(0, len(solutions), BLOCK):
            d_sk = dist[lo : lo + BLOCK, cols]
            s_sk = sigma[lo : lo + BLOCK, cols]
            weight = ind[None, :] + delta[lo : lo + BLOCK, cols]
            acc += _interior_block(tab.dist, tab.sigma, d_sk, s_sk, weight, epsilon).sum(axis=0)
        scores[np.asarray(sn.interior, dtype=np.intp)] += acc
    return CentralityVector(scores)
