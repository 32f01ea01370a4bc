"""Monte Carlo k-NN by repeated random sampling.

Each round samples every vertex with probability 1/k and runs one
multi-source Dijkstra from the sample, so every vertex learns its nearest
sampled source. Pooled over enough rounds, each of a vertex's true k
nearest sources is, with high probability, the nearest sample in some round.
Results are never wrong, only possibly incomplete.
"""

from __future__ import annotations

import heapq
import math
from typing import Iterable

import numpy as np

from .graph import Graph, KnnTable, NeighborEntry, check_vertices

DEFAULT_CONFIDENCE = 4.0


def round_count(n: int, k: int, c: float = DEFAULT_CONFIDENCE) -> int:
    """Rounds ``ceil(10 c k ln n)``.

    With each round hitting a given (source, vertex) pair with probability at
    least 1/(10k), a pair is missed with probability below n**-c, and the
    whole table is wrong with probability at most n**-(c-2).
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if k < 1:
        raise ValueError("k must be at least 1")
    if c < 3:
        raise ValueError("confidence exponent must be at least 3")
    return math.ceil(10 * c * k * math.log(n))


def sample_round(n: int, k: int, seed: int, index: int) -> list[int]:
    """Vertices of round ``index``: each kept independently with probability 1/k.

    Vertex ``v``'s membership is decided by the ``v``-th draw of a generator
    keyed on ``(seed, index)``, so it depends on nothing else.
    """
    if k == 1:
        return list(range(n))
    rng = np.random.default_rng([seed, index])
    return np.flatnonzero(rng.random(n) < 1.0 / k).tolist()


def multi_source_dijkstra(
    g: Graph, sources: Iterable[int]
) -> list[tuple[int, float] | None]:
    """Nearest source of every vertex as ``(source, distance)``, or None.

    All sources start at distance 0 in the heap. Labels compare as
    ``(distance, source)``, so equidistant sources resolve to the lower id.
    """
    sources = sorted(set(sources))
    check_vertices(g.n, sources)
    adj = g.out_adj
    inf = math.inf
    dist = [inf] * g.n
    near = [-1] * g.n
    heap = []
    for s in sources:
        dist[s] = 0.0
        near[s] = s
        heap.append((0.0, s, s))
    heapq.heapify(heap)
    pop, push = heapq.heappop, heapq.heappush
    while heap:
        d, s, v = pop(heap)
        if d != dist[v] or s != near[v]:
            continue
        for z, w in adj[v]:
            nd = d + w
            dz = dist[z]
            if nd < dz or (nd == dz and s < near[z]):
                dist[z] = nd
                near[z] = s
                push(heap, (nd, s, z))
    return [None if s < 0 else (s, d) for s, d in zip(near, dist)]


def randomized_knn(
    g: Graph,
    k: int,
    c: float = DEFAULT_CONFIDENCE,
    seed: int = 0,
    rounds: int | None = None,
) -> KnnTable:
    """k-NN table correct with probability at least ``1 - n**-(c-2)``.

    ``rounds`` overrides the round count; useful for forcing failures.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    n = g.n
    if n < 2:
        return KnnTable(k, [[NeighborEntry(v, 0.0)] for v in range(n)])
    t = round_count(n, k, c) if rounds is None else rounds
    pools: list[dict[int, float]] = [{} for _ in range(n)]
    for i in range(t):
        members = sample_round(n, k, seed, i)
        if not members:
            continue
        for v, hit in enumerate(multi_source_dijkstra(g, members)):
            if hit is None:
                continue
            s, d = hit
            pool = pools[v]
            prev = pool.get(s)
            if prev is None:
                pool[s] = d
            else:
                assert prev == d, f"source {s} offered two distances to {v}"
    rows = []
    for pool in pools:
        best = sorted((d, s) for s, d in pool.items())[:k]
        rows.append([NeighborEntry(s, d) for d, s in best])
    return KnnTable(k, rows)
