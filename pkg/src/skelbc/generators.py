"""Synthetic graphs, planted partitions and random target sets."""

from __future__ import annotations

import numpy as np

from .graph import Graph
from .partition import Partition


def _weights(rng: np.random.Generator, count: int, max_weight: int) -> np.ndarray:
    if max_weight <= 1:
        return np.ones(count)
    return rng.integers(1, max_weight + 1, size=count).astype(float)


def _from_pairs(n: int, us, vs, ws) -> Graph:
    # isolated nodes have no edge-list form, so they are left out
    used = sorted(set(map(int, us)) | set(map(int, vs)))
    pos = {v: i for i, v in enumerate(used)}
    return Graph(
        [str(v) for v in used],
        [(pos[int(u)], pos[int(v)], float(w)) for u, v, w in zip(us, vs, ws)],
    )


def planted_partition(
    k: int,
    size: int,
    p_in: float,
    p_out: float,
    seed: int = 0,
    max_weight: int = 1,
) -> tuple[Graph, Partition]:
    """``k`` communities of ``size`` nodes; node ``c*size + j`` is in community ``c``.

    Returns the graph and its planted partition (restricted to nodes that
    have at least one edge).
    """
    if k < 1 or size < 1:
        raise ValueError("k and size must be positive")
    if not (0 <= p_in <= 1 and 0 <= p_out <= 1):
        raise ValueError("probabilities must lie in [0, 1]")
    rng = np.random.default_rng(seed)
    n = k * size
    comm = np.arange(n) // size
    us, vs = [], []
    for u in range(n - 1):
        v = np.arange(u + 1, n)
        p = np.where(comm[v] == comm[u], p_in, p_out)
        hit = v[rng.random(len(v)) < p]
        us.extend([u] * len(hit))
        vs.extend(hit.tolist())
    graph = _from_pairs(n, us, vs, _weights(rng, len(us), max_weight))
    part = Partition([int(lab) // size for lab in graph.labels])
    return graph, part


def erdos_renyi(n: int, p: float, seed: int = 0, max_weight: int = 1) -> Graph:
    if n < 1:
        raise ValueError("n must be positive")
    if not 0 <= p <= 1:
        raise ValueError("p must lie in [0, 1]")
    rng = np.random.default_rng(seed)
    iu, iv = np.triu_indices(n, 1)
    keep = rng.random(len(iu)) < p
    us, vs = iu[keep], iv[keep]
    return _from_pairs(n, us, vs, _weights(rng, len(us), max_weight))


def path_graph(n: int, seed: int = 0, max_weight: int = 1) -> Graph:
    if n < 2:
        raise ValueError("a path needs at least 2 nodes")
    rng = np.random.default_rng(seed)
    return _from_pairs(n, range(n - 1), range(1, n), _weights(rng, n - 1, max_weight))


def cycle_graph(n: int, seed: int = 0, max_weight: int = 1) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 nodes")
    rng = np.random.default_rng(seed)
    return _from_pairs(
        n, range(n), [(i + 1) % n for i in range(n)], _weights(rng, n, max_weight)
    )


def star_graph(leaves: int, seed: int = 0, max_weight: int = 1) -> Graph:
    """Center ``0`` joined to leaves ``1..leaves``."""
    if leaves < 1:
        raise ValueError("a star needs at least 1 leaf")
    rng = np.random.default_rng(seed)
    return _from_pairs(
        leaves + 1, [0] * leaves, range(1, leaves + 1), _weights(rng, leaves, max_weight)
    )


def random_targets(graph: Graph, count: int, seed: int = 0) -> list[int]:
    """``count`` distinct nodes drawn uniformly without replacement, sorted."""
    if not 0 <= count <= graph.n:
        raise ValueError(f"cannot draw {count} targets from {graph.n} nodes")
    rng = np.random.default_rng(seed)
    return sorted(int(v) for v in rng.choice(graph.n, size=count, replace=False))


def random_partition(n: int, k: int, seed: int = 0) -> Partition:
    """Uniformly random labels in ``0..k-1`` (empty parts are compacted away)."""
    rng = np.random.default_rng(seed)
    return Partition(rng.integers(0, k, size=n).tolist())
