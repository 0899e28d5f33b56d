"""Node partitions: loading, target-singleton refinement, and a simple partitioner."""

from __future__ import annotations

import heapq
import io
import random
from collections import deque
from typing import Iterable, Sequence, TextIO

from .graph import Graph


class PartitionError(ValueError):
    pass


class Partition:
    """Assignment of every node to exactly one of ``k`` non-empty parts.

    Part ids are dense (``0..k-1``); ``parts[i]`` lists the members of part
    ``i`` in ascending node order.
    """

    __slots__ = ("part_of", "k", "parts")

    def __init__(self, part_of: Sequence[int]):
        # compact ids in order of first appearance so no part is empty
        remap: dict[int, int] = {}
        for p in part_of:
            if p not in remap:
                remap[p] = len(remap)
        self.part_of = tuple(remap[p] for p in part_of)
        self.k = len(remap)
        members: list[list[int]] = [[] for _ in range(self.k)]
        for v, p in enumerate(self.part_of):
            members[p].append(v)
        self.parts = tuple(tuple(m) for m in members)

    @classmethod
    def from_parts(cls, n: int, parts: Iterable[Iterable[int]]) -> "Partition":
        """Build from explicit member lists; ids follow the given order."""
        part_of = [-1] * n
        for i, members in enumerate(parts):
            for v in members:
                if not 0 <= v < n:
                    raise PartitionError(f"node {v} out of range")
                if part_of[v] != -1:
                    raise PartitionError(f"node {v} assigned twice")
                part_of[v] = i
        missing = [v for v in range(n) if part_of[v] == -1]
        if missing:
            raise PartitionError(f"{len(missing)} node(s) unassigned, e.g. {missing[0]}")
        # ids follow the order of `parts`, skipping empty ones
        used = sorted(set(part_of))
        remap = {old: new for new, old in enumerate(used)}
        obj = cls.__new__(cls)
        obj.part_of = tuple(remap[p] for p in part_of)
        obj.k = len(used)
        members: list[list[int]] = [[] for _ in range(obj.k)]
        for v, p in enumerate(obj.part_of):
            members[p].append(v)
        obj.parts = tuple(tuple(m) for m in members)
        return obj

    @property
    def n(self) -> int:
        return len(self.part_of)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.part_of == other.part_of

    __hash__ = None  # type: ignore[assignment]

    def groups(self) -> set[frozenset[int]]:
        """Parts as a set of node sets, ignoring id numbering."""
        return {frozenset(p) for p in self.parts}

    def __repr__(self) -> str:
        return f"Partition(n={self.n}, k={self.k})"


def check_partition(partition: Partition, n: int) -> None:
    """Raise :class:`PartitionError` unless ``partition`` is valid over ``n`` nodes."""
    if len(partition.part_of) != n:
        raise PartitionError(f"partition covers {len(partition.part_of)} nodes, graph has {n}")
    if partition.k != len(partition.parts):
        raise PartitionError("k disagrees with the number of parts")
    seen = [False] * n
    for i, members in enumerate(partition.parts):
        if not members:
            raise PartitionError(f"part {i} is empty")
        for v in members:
            if seen[v]:
                raise PartitionError(f"node {v} in two parts")
            if partition.part_of[v] != i:
                raise PartitionError(f"node {v} part id mismatch")
            seen[v] = True
    if not all(seen):
        raise PartitionError("partition does not cover every node")
    if any(not 0 <= p < partition.k for p in partition.part_of):
        raise PartitionError("part id out of range")


def load_partition(stream: TextIO | str, graph: Graph) -> Partition:
    """Read ``node part_label`` lines; every graph node must be assigned."""
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    label_of: dict[int, str] = {}
    for lineno, line in enumerate(stream, start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise PartitionError(f"line {lineno}: expected 'node part', got {line!r}")
        node, part = fields
        if node not in graph.index:
            raise PartitionError(f"line {lineno}: unknown node {node!r}")
        v = graph.index[node]
        if v in label_of and label_of[v] != part:
            raise PartitionError(
                f"line {lineno}: node {node!r} assigned to both {label_of[v]!r} and {part!r}"
            )
        label_of[v] = part
    missing = [graph.labels[v] for v in range(graph.n) if v not in label_of]
    if missing:
        raise PartitionError(f"{len(missing)} node(s) without a part, e.g. {missing[0]!r}")
    # dense ids by first appearance in node order
    ids: dict[str, int] = {}
    return Partition([ids.setdefault(label_of[v], len(ids)) for v in range(graph.n)])


def dump_partition(partition: Partition, graph: Graph, stream: TextIO) -> None:
    for v in range(graph.n):
        stream.write(f"{graph.labels[v]} {partition.part_of[v]}\n")


def refine_with_targets(partition: Partition, targets: Iterable[int]) -> Partition:
    """Pull every target out of its part into a singleton part.

    The remaining parts keep their relative order; singletons follow in
    ascending target order. Parts emptied by the extraction disappear.
    """
    targets = sorted(set(targets))
    n = partition.n
    for s in targets:
        if not 0 <= s < n:
            raise PartitionError(f"target {s} out of range")
    is_target = set(targets)
    parts = [[v for v in members if v not in is_target] for members in partition.parts]
    parts = [p for p in parts if p]
    parts.extend([s] for s in targets)
    return Partition.from_parts(n, parts)


def _hop_distances(graph: Graph, sources: Iterable[int]) -> list[int]:
    nbrs, _ = graph.adjacency()
    dist = [-1] * graph.n
    queue = deque()
    for s in sources:
        dist[s] = 0
        queue.append(s)
    while queue:
        u = queue.popleft()
        for v in nbrs[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def _spread_seeds(graph: Graph, k: int, rng: random.Random) -> list[int]:
    seeds = [rng.randrange(graph.n)]
    chosen = {seeds[0]}
    while len(seeds) < k:
        dist = _hop_distances(graph, seeds)
        # unreachable nodes count as farthest; ties go to the lowest index
        far = max(
            (v for v in range(graph.n) if v not in chosen),
            key=lambda v: (dist[v] < 0, dist[v], -v),
        )
        seeds.append(far)
        chosen.add(far)
    return seeds


def bfs_balanced_partition(graph: Graph, k: int, seed: int = 0) -> Partition:
    """Grow ``k`` regions breadth-first from spread-out seeds.

    The smallest region that can still grow takes the next node, which keeps
    sizes close to ``n / k`` on well-connected graphs. Regions stay connected
    inside a connected graph; nodes of components that no seed reaches go to
    the currently smallest region. This is a convenience for the CLI, not a
    quality partitioner.
    """
    n = graph.n
    if not 1 <= k <= n:
        raise PartitionError(f"k must be in 1..{n}, got {k}")
    rng = random.Random(seed)
    nbrs, _ = graph.adjacency()
    seeds = _spread_seeds(graph, k, rng)

    part_of = [-1] * n
    size = [0] * k
    pending = [deque() for _ in range(k)]
    for p, s in enumerate(seeds):
        part_of[s] = p
        size[p] = 1
        pending[p].extend(nbrs[s])
    heap = [(1, p) for p in range(k)]
    assigned = k
    while assigned < n:
        if not heap:
            # leftover component: restart growth in the smallest region
            v = next(x for x in range(n) if part_of[x] == -1)
            p = min(range(k), key=lambda q: (size[q], q))
            part_of[v] = p
            size[p] += 1
            assigned += 1
            pending[p].extend(nbrs[v])
            heap = [(size[q], q) for q in range(k) if pending[q]]
            heapq.heapify(heap)
            continue
        sz, p = heapq.heappop(heap)
        if sz != size[p]:
            continue
        queue = pending[p]
        while queue and part_of[queue[0]] != -1:
            queue.popleft()
        if not queue:
            continue
        v = queue.popleft()
        part_of[v] = p
        size[p] += 1
        assigned += 1
        queue.extend(x for x in nbrs[v] if part_of[x] == -1)
        heapq.heappush(heap, (size[p], p))
    return Partition.from_parts(n, ([v for v in range(n) if part_of[v] == p] for p in range(k)))


def trivial_partition(n: int) -> Partition:
    return Partition([0] * n)


def singleton_partition(n: int) -> Partition:
    return Partition(range(n))
