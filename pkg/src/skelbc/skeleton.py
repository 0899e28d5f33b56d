"""Skeleton construction: frontiers, frontier-restricted Dijkstra, assembly.

A supernode is the subgraph induced by one part. Its frontier holds the
members with a neighbor in another part. The skeleton keeps only frontier
nodes, joined by the original inter-part edges and by one clique edge per
frontier pair of a supernode. Each edge carries ``(dist, mult)``: the length
and number of shortest paths it stands for.
"""

from __future__ import annotations

import heapq
import math
import time
from dataclasses import dataclass
from typing import Iterable, NamedTuple, TextIO

import numpy as np

from ._pool import ordered_map
from .brandes import EPSILON
from .graph import Graph, format_weight
from .partition import Partition

INF = math.inf


class CharTuple(NamedTuple):
    dist: float
    mult: float


@dataclass(frozen=True)
class Supernode:
    """Induced subgraph of one part, with local adjacency for fast scans.

    ``nbrs``/``wts`` are indexed by position in ``nodes`` and only contain
    edges with both endpoints inside the part.
    """

    part: int
    nodes: tuple[int, ...]
    frontier: tuple[int, ...]
    interior: tuple[int, ...]
    nbrs: tuple[tuple[int, ...], ...]
    wts: tuple[tuple[float, ...], ...]

    @property
    def key(self) -> tuple:
        return (self.nodes, self.frontier)

    def edges(self) -> list[tuple[int, int, float]]:
        """Induced edges ``(u, v, w)`` in graph ids, ``u < v``."""
        out = []
        for a, (row, ws) in enumerate(zip(self.nbrs, self.wts)):
            for b, w in zip(row, ws):
                if a < b:
                    out.append((self.nodes[a], self.nodes[b], w))
        return out


@dataclass
class SupernodeTables:
    """Output of the frontier runs inside one supernode.

    ``clique`` maps frontier pairs ``(f, q)``, ``f < q`` in graph ids, to their
    tuple. ``dist``/``sigma`` have shape ``(len(frontier), len(interior))``
    and hold frontier-to-interior values over paths whose intermediates are
    all interior.
    """

    clique: dict[tuple[int, int], CharTuple]
    dist: np.ndarray
    sigma: np.ndarray
    seconds: float = 0.0


def find_frontiers(
    graph: Graph, partition: Partition, pinned: Iterable[int] = ()
) -> list[Supernode]:
    """Split ``graph`` into supernodes and find each frontier.

    Nodes in ``pinned`` count as frontier nodes even without a crossing
    edge.
    """
    part_of = partition.part_of
    pinned = set(pinned)
    nbrs, wts = graph.adjacency()
    out = []
    for p, members in enumerate(partition.parts):
        pos = {v: i for i, v in enumerate(members)}
        lnbrs, lwts, frontier, interior = [], [], [], []
        for v in members:
            row, ws = [], []
            crossing = False
            for u, w in zip(nbrs[v], wts[v]):
                if part_of[u] == p:
                    row.append(pos[u])
                    ws.append(w)
                else:
                    crossing = True
            lnbrs.append(tuple(row))
            lwts.append(tuple(ws))
            (frontier if crossing or v in pinned else interior).append(v)
        out.append(
            Supernode(p, tuple(members), tuple(frontier), tuple(interior), tuple(lnbrs), tuple(lwts))
        )
    return out


def dijkstra_sk(
    sn: Supernode, f: int, epsilon: float = EPSILON
) -> tuple[list[float], list[float]]:
    """Distances and path counts from frontier ``f`` inside ``sn``.

    Only paths whose intermediate nodes are all interior count: other
    frontier nodes are settled but never expanded. Results are indexed by
    position in ``sn.nodes``; ``sigma`` at ``f`` itself is 1.
    """
    pos = {v: i for i, v in enumerate(sn.nodes)}
    if f not in pos or f not in sn.frontier:
        raise ValueError(f"node {f} is not a frontier of part {sn.part}")
    blocked = [False] * len(sn.nodes)
    for q in sn.frontier:
        blocked[pos[q]] = True
    src = pos[f]
    blocked[src] = False

    nbrs, wts = sn.nbrs, sn.wts
    n = len(sn.nodes)
    dist = [INF] * n
    sigma = [0.0] * n
    done = [False] * n
    dist[src] = 0.0
    sigma[src] = 1.0
    heap = [(0.0, src)]
    while heap:
        d, u = heapq.heappop(heap)
        if done[u]:
            continue
        done[u] = True
        if blocked[u]:
            continue
        su = sigma[u]
        for v, w in zip(nbrs[u], wts[u]):
            if done[v]:
                continue
            alt = d + w
            dv = dist[v]
            if alt < dv - epsilon:
                dist[v] = alt
                sigma[v] = su
                heapq.heappush(heap, (alt, v))
            elif alt <= dv + epsilon:
                sigma[v] += su
    return dist, sigma


def supernode_tables(sn: Supernode, epsilon: float = EPSILON) -> SupernodeTables:
    t0 = time.perf_counter()
    pos = {v: i for i, v in enumerate(sn.nodes)}
    fpos = [pos[f] for f in sn.frontier]
    ipos = [pos[v] for v in sn.interior]
    dist = np.full((len(fpos), len(ipos)), INF)
    sigma = np.zeros((len(fpos), len(ipos)))
    clique: dict[tuple[int, int], CharTuple] = {}
    for a, f in enumerate(sn.frontier):
        d, s = dijkstra_sk(sn, f, epsilon)
        if ipos:
            dist[a] = [d[i] for i in ipos]
            sigma[a] = [s[i] for i in ipos]
        for b in range(a + 1, len(fpos)):
            q = sn.frontier[b]
            if s[fpos[b]] > 0:
                clique[(f, q)] = CharTuple(d[fpos[b]], s[fpos[b]])
    return SupernodeTables(clique, dist, sigma, time.perf_counter() - t0)


class Skeleton:
    """Frontier graph with characteristic tuples plus interior tables.

    Skeleton nodes get local indices ``0..len(nodes)-1`` in ascending graph
    id order; ``nbrs``/``lengths``/``mults`` are the local adjacency used by
    the multiplicity-aware Brandes.
    """

    def __init__(
        self,
        graph: Graph,
        partition: Partition,
        supernodes: list[Supernode],
        tables: list[SupernodeTables],
    ):
        self.graph = graph
        self.partition = partition
        self.supernodes = supernodes
        self.tables = tables
        self.nodes = tuple(sorted(f for sn in supernodes for f in sn.frontier))
        self.local = {v: i for i, v in enumerate(self.nodes)}

        part_of = partition.part_of
        self.r_edges: dict[tuple[int, int], CharTuple] = {
            (u, v): CharTuple(w, 1.0) for u, v, w in graph.edges() if part_of[u] != part_of[v]
        }
        self.x_edges: dict[tuple[int, int], CharTuple] = {}
        for t in tables:
            self.x_edges.update(t.clique)

        rows: list[list[tuple[int, float, float]]] = [[] for _ in self.nodes]
        for edges in (self.r_edges, self.x_edges):
            for (u, v), (d, k) in edges.items():
                a, b = self.local[u], self.local[v]
                rows[a].append((b, d, k))
                rows[b].append((a, d, k))
        for row in rows:
            row.sort()
        self.nbrs = tuple(tuple(b for b, _, _ in row) for row in rows)
        self.lengths = tuple(tuple(d for _, d, _ in row) for row in rows)
        self.mults = tuple(tuple(k for _, _, k in row) for row in rows)

    @property
    def edges(self) -> dict[tuple[int, int], CharTuple]:
        return {**self.r_edges, **self.x_edges}

    @property
    def build_seconds(self) -> list[float]:
        return [t.seconds for t in self.tables]

    def __repr__(self) -> str:
        return (
            f"Skeleton(nodes={len(self.nodes)}, R={len(self.r_edges)}, "
            f"X={len(self.x_edges)}, parts={len(self.supernodes)})"
        )

    def dump(self, stream: TextIO) -> None:
        """Annotated edge list ``f q dist mult``, R edges first."""
        labels = self.graph.labels
        for edges in (self.r_edges, self.x_edges):
            for (u, v), (d, k) in sorted(edges.items()):
                stream.write(f"{labels[u]} {labels[v]} {format_weight(d)} {format_weight(k)}\n")


def _tables_job(epsilon, sn):
    return supernode_tables(sn, epsilon)


def build_skeleton(
    graph: Graph,
    partition: Partition,
    targets: Iterable[int] = (),
    epsilon: float = EPSILON,
    workers: int = 1,
    cache: dict[tuple, SupernodeTables] | None = None,
    pinned: Iterable[int] = (),
) -> Skeleton:
    """Build the skeleton of ``graph`` under ``partition``.

    Every node in ``targets`` must already be a singleton part. Nodes in
    ``pinned`` are made frontier nodes of their own part instead, which
    keeps them in the skeleton without splitting their part. ``cache`` maps
    :attr:`Supernode.key` to previously computed tables; hits skip the
    frontier runs and new results are added to it.
    """
    for s in targets:
        if len(partition.parts[partition.part_of[s]]) != 1:
            raise ValueError(f"target {s} is not a singleton part; refine the partition first")
    supernodes = find_frontiers(graph, partition, pinned)
    tables: list[SupernodeTables | None] = [None] * len(supernodes)
    todo = []
    for i, sn in enumerate(supernodes):
        if cache is not None and sn.key in cache:
            tables[i] = cache[sn.key]
        elif len(sn.frontier) <= 1 and not sn.interior:
            tables[i] = SupernodeTables({}, np.zeros((len(sn.frontier), 0)), np.zeros((len(sn.frontier), 0)))
        else:
            todo.append(i)
    results = ordered_map(_tables_job, [supernodes[i] for i in todo], epsilon, workers)
    for i, res in zip(todo, results):
        tables[i] = res
        if cache is not None:
            cache[supernodes[i].key] = res
    return Skeleton(graph, partition, supernodes, tables)
