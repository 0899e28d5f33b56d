"""Exact betweenness centrality by divide and conquer over graph skeletons."""

from .all_pairs import brandes_pp_all
from .brandes import CentralityVector, brandes, dijkstra_sssp
from .driver import brandes_pp
from .graph import Graph, load_edge_list
from .oracle import oracle_betweenness
from .partition import Partition, bfs_balanced_partition, load_partition, refine_with_targets
from .skeleton import build_skeleton

__all__ = [
    "CentralityVector",
    "Graph",
    "Partition",
    "bfs_balanced_partition",
    "brandes",
    "brandes_pp",
    "brandes_pp_all",
    "build_skeleton",
    "dijkstra_sssp",
    "load_edge_list",
    "load_partition",
    "oracle_betweenness",
    "refine_with_targets",
]
