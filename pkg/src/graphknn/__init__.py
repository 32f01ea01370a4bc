"""k nearest neighbors of every vertex under shortest-path distance."""

from .fast import SimultaneousDijkstra, knn_all, knn_from_terminals
from .graph import (
    Graph,
    GraphFormatError,
    KnnTable,
    NeighborEntry,
    RunStats,
    canonical_less,
    parse_graph,
    reverse,
)
from .oracle import brute_force_knn, truncated_dijkstra
from .randomized import multi_source_dijkstra, randomized_knn, round_count

__all__ = [
    "Graph",
    "GraphFormatError",
    "KnnTable",
    "NeighborEntry",
    "RunStats",
    "SimultaneousDijkstra",
    "brute_force_knn",
    "canonical_less",
    "knn_all",
    "knn_from_terminals",
    "multi_source_dijkstra",
    "parse_graph",
    "randomized_knn",
    "reverse",
    "round_count",
    "truncated_dijkstra",
]
