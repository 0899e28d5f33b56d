"""Immutable weighted undirected graphs with dense node indices."""

from __future__ import annotations

import io
from typing import Iterable, Sequence, TextIO


class GraphFormatError(ValueError):
    """Raised when an edge list cannot be turned into a valid graph."""

    def __init__(self, message: str, lineno: int | None = None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno


class Graph:
    """Weighted undirected simple graph over nodes ``0..n-1``.

    Neighbor lists are kept in ascending index order so that every traversal
    is deterministic. ``labels[i]`` is the external label of node ``i``.
    """

    __slots__ = ("n", "labels", "index", "_nbrs", "_wts", "_m")

    def __init__(self, labels: Sequence[str], edges: Iterable[tuple[int, int, float]]):
        self.n = len(labels)
        self.labels = tuple(labels)
        self.index = {lab: i for i, lab in enumerate(self.labels)}
        if len(self.index) != self.n:
            raise ValueError("node labels must be unique")

        best: dict[tuple[int, int], float] = {}
        for u, v, w in edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range")
            if u == v:
                raise ValueError(f"self-loop on node {self.labels[u]!r}")
            if not w > 0:
                raise ValueError(f"non-positive weight {w} on edge ({u}, {v})")
            key = (u, v) if u < v else (v, u)
            if key not in best or w < best[key]:
                best[key] = float(w)

        adj: list[list[tuple[int, float]]] = [[] for _ in range(self.n)]
        for (u, v), w in best.items():
            adj[u].append((v, w))
            adj[v].append((u, w))
        for row in adj:
            row.sort()
        self._nbrs = tuple(tuple(v for v, _ in row) for row in adj)
        self._wts = tuple(tuple(w for _, w in row) for row in adj)
        self._m = len(best)

    @property
    def m(self) -> int:
        return self._m

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IndexError(f"node index {v} out of range for n={self.n}")

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self._nbrs[v])

    def neighbors(self, v: int) -> list[tuple[int, float]]:
        self._check(v)
        return list(zip(self._nbrs[v], self._wts[v]))

    def adjacency(self) -> tuple[tuple[tuple[int, ...], ...], tuple[tuple[float, ...], ...]]:
        """Raw ``(neighbor_ids, weights)`` rows for hot loops."""
        return self._nbrs, self._wts

    def edges(self) -> list[tuple[int, int, float]]:
        """Each undirected edge once as ``(u, v, w)`` with ``u < v``, sorted."""
        return [
            (u, v, w)
            for u in range(self.n)
            for v, w in zip(self._nbrs[u], self._wts[u])
            if u < v
        ]

    def weight(self, u: int, v: int) -> float | None:
        self._check(u)
        self._check(v)
        for x, w in zip(self._nbrs[u], self._wts[u]):
            if x == v:
                return w
        return None

    def node_ids(self, labels: Iterable[str]) -> list[int]:
        out = []
        for lab in labels:
            if lab not in self.index:
                raise KeyError(f"unknown node label {lab!r}")
            out.append(self.index[lab])
        return out

    def labelled_edges(self) -> set[tuple[str, str, float]]:
        out = set()
        for u, v, w in self.edges():
            a, b = self.labels[u], self.labels[v]
            out.add((a, b, w) if a < b else (b, a, w))
        return out

    def __eq__(self, other: object) -> bool:
        # identity under the label map, independent of dense index order
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            set(self.labels) == set(other.labels)
            and self.labelled_edges() == other.labelled_edges()
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    @classmethod
    def from_edges(cls, edges: Iterable[tuple], labels: Sequence[str] | None = None) -> "Graph":
        """Build from ``(u, v)`` or ``(u, v, w)`` tuples of external labels.

        Without ``labels`` the node order is first appearance.
        """
        edges = list(edges)
        if labels is None:
            seen: dict[str, None] = {}
            for e in edges:
                seen.setdefault(str(e[0]))
                seen.setdefault(str(e[1]))
            labels = list(seen)
        index = {str(lab): i for i, lab in enumerate(labels)}
        triples = [
            (index[str(e[0])], index[str(e[1])], float(e[2]) if len(e) > 2 else 1.0)
            for e in edges
        ]
        return cls([str(lab) for lab in labels], triples)


def _parse_weight(token: str, lineno: int) -> float:
    try:
        w = float(token)
    except ValueError:
        raise GraphFormatError(f"bad weight {token!r}", lineno) from None
    if not w > 0 or w != w or w == float("inf"):
        raise GraphFormatError(f"weight must be a positive finite number, got {token}", lineno)
    return w


def load_edge_list(stream: TextIO | str, isolated: Iterable[str] = ()) -> Graph:
    """Parse ``u v [w]`` lines into a :class:`Graph`.

    ``#`` starts a comment. Missing weights default to 1.0, duplicate
    undirected edges keep the minimum weight, and labels get dense indices
    in order of first appearance. ``isolated`` appends extra labels that
    have no edges.
    """
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    index: dict[str, int] = {}
    labels: list[str] = []
    triples: list[tuple[int, int, float]] = []

    def intern(lab: str) -> int:
        if lab not in index:
            index[lab] = len(labels)
            labels.append(lab)
        return index[lab]

    for lineno, line in enumerate(stream, start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) not in (2, 3):
            raise GraphFormatError(f"expected 'u v [w]', got {line!r}", lineno)
        a, b = parts[0], parts[1]
        w = _parse_weight(parts[2], lineno) if len(parts) == 3 else 1.0
        if a == b:
            raise GraphFormatError(f"self-loop on {a!r}", lineno)
        triples.append((intern(a), intern(b), w))
    for lab in isolated:
        intern(lab)
    return Graph(labels, triples)


def format_weight(w: float) -> str:
    return str(int(w)) if w.is_integer() else repr(w)


def dump_edge_list(graph: Graph, stream: TextIO) -> None:
    """Write ``graph`` as an edge list that :func:`load_edge_list` reads back.

    Isolated nodes have no edge-list form; they are named in a trailing
    comment and dropped on reload.
    """
    seen = [False] * graph.n
    for u, v, w in graph.edges():
        stream.write(f"{graph.labels[u]} {graph.labels[v]} {format_weight(w)}\n")
        seen[u] = seen[v] = True
    lonely = [graph.labels[i] for i in range(graph.n) if not seen[i]]
    if lonely:
        stream.write("# isolated: " + " ".join(lonely) + "\n")


def load_node_set(stream: TextIO | str, graph: Graph) -> list[int]:
    """Read whitespace-separated node labels (``#`` comments) as sorted indices."""
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    out = set()
    for lineno, line in enumerate(stream, start=1):
        for lab in line.split("#", 1)[0].split():
            if lab not in graph.index:
                raise GraphFormatError(f"unknown node {lab!r}", lineno)
            out.add(graph.index[lab])
    return sorted(out)


def label_sort_key(label: str) -> tuple:
    """Integers first in numeric order, then everything else as text."""
    try:
        return (0, int(label), "")
    except ValueError:
        return (1, 0, label)
