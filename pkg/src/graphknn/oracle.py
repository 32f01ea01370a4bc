"""Brute-force reference tables: one full Dijkstra per source.

Deliberately plain. It uses heapq with stale entries skipped on pop and
shares no queue code with the fast engine, so the two cannot hide the same
bug. Quadratic-ish in n; meant for graphs of at most a few thousand vertices.
"""

from __future__ import annotations

import heapq
from typing import Iterable

from .graph import Graph, KnnTable, NeighborEntry, check_vertices


def _dijkstra(adj, source: int, limit: int | None = None) -> list[tuple[int, float]]:
    done = set()
    best = {source: 0.0}
    heap = [(0.0, source)]
    order = []
    while heap:
        d, v = heapq.heappop(heap)
        if v in done:
            continue
        done.add(v)
        order.append((v, d))
        if limit is not None and len(order) == limit:
            break
        for z, w in adj[v]:
            nd = d + w
            if z not in done and (z not in best or nd < best[z]):
                best[z] = nd
                heapq.heappush(heap, (nd, z))
    return order


def truncated_dijkstra(g: Graph, source: int, limit: int) -> list[tuple[int, float]]:
    """First ``limit`` vertices settled from ``source``, in (distance, id) order."""
    if limit < 1:
        raise ValueError("limit must be at least 1")
    check_vertices(g.n, [source])
    return _dijkstra(g.out_adj, source, limit)


def brute_force_knn(
    g: Graph, k: int, terminals: Iterable[int] | None = None
) -> KnnTable:
    """Exact table from a full Dijkstra out of every (terminal) source.

    Running forward from each source accumulates path sums in the same order
    as the fast engine, so even non-integer weights compare bit for bit.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if terminals is None:
        sources = range(g.n)
    else:
        sources = sorted(set(terminals))
        check_vertices(g.n, sources)
    cands: list[list[tuple[float, int]]] = [[] for _ in range(g.n)]
    for u in sources:
        for v, d in _dijkstra(g.out_adj, u):
            cands[v].append((d, u))
    rows = []
    for row in cands:
        row.sort()
        rows.append([NeighborEntry(u, d) for d, u in row[:k]])
    return KnnTable(k, rows)
