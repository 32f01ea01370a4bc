"""Exact k-NN for every vertex by running one Dijkstra per source at once.

All searches share a two-level queue: vertex ``u`` owns a local queue of
pending events ``(u, s, d)`` with at most one entry per source ``s``, and a
global queue over vertices holds each local minimum. Once ``k`` sources have
settled at a vertex its local queue is disabled and drops out of the global
queue for good, which caps the work at ``k`` settles per vertex and ``k``
relaxations per edge.
"""

from __future__ import annotations

from bisect import bisect_left, insort
from typing import Iterable, NamedTuple

from .graph import Graph, KnnTable, NeighborEntry, RunStats, check_vertices
from .heaps import DECREASED, EVICTED, REJECTED, AddressableHeap, BoundedQueue, LazyHeap

MODES = ("hashed", "bounded")


class Event(NamedTuple):
    target: int
    source: int
    dist: float


class _SortedSet:
    """Ordered membership for the settled sources of one vertex (bounded mode)."""

    __slots__ = ("_items",)

    def __init__(self):
        self._items: list[int] = []

    def __contains__(self, x: int) -> bool:
        items = self._items
        i = bisect_left(items, x)
        return i < len(items) and items[i] == x

    def add(self, x: int) -> None:
        insort(self._items, x)

    def __len__(self) -> int:
        return len(self._items)


class SimultaneousDijkstra:
    """State of one k-NN run. Drive it with :meth:`step` or :meth:`run`.

    ``mode="hashed"`` gives each local queue a heap with lazy decrease-key
    and tracks settled sources in a hash set. ``mode="bounded"`` keeps at most
    ``k`` pending candidates per vertex in an ordered store and rejects
    offers that cannot rank among them.
    """

    def __init__(
        self,
        g: Graph,
        k: int,
        seeds: Iterable[int] | None = None,
        mode: str = "hashed",
        stats: RunStats | None = None,
    ):
        if k < 1:
            raise ValueError("k must be at least 1")
        if mode not in MODES:
            raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
        seeds = range(g.n) if seeds is None else sorted(set(seeds))
        check_vertices(g.n, seeds)
        if g.n and not seeds:
            raise ValueError("seed set must not be empty")
        self.g = g
        self.k = k
        self.mode = mode
        self.stats = stats if stats is not None else RunStats()
        self.disabled = [False] * g.n
        self.rows: list[list[NeighborEntry]] = [[] for _ in range(g.n)]
        bounded = mode == "bounded"
        self._bounded = bounded
        self.settled = [_SortedSet() if bounded else set() for _ in range(g.n)]
        self.local: list = [None] * g.n
        self.global_queue = AddressableHeap()
        for s in seeds:
            self._offer(s, s, 0.0)

    def _new_queue(self):
        return BoundedQueue(self.k) if self._bounded else LazyHeap()

    def step(self) -> Event | None:
        """Settle the globally smallest pending event; None once exhausted."""
        gq = self.global_queue
        if not gq:
            return None
        stats = self.stats
        v, gkey = gq.pop()
        q = self.local[v]
        s, key = q.pop()
        assert key == gkey[:2], "global key out of sync with local minimum"
        settled = self.settled[v]
        assert s not in settled, "stale event reached the front of a local queue"
        d = key[0]
        settled.add(s)
        row = self.rows[v]
        row.append(NeighborEntry(s, d))
        g_inserts = 0
        if len(row) == self.k:
            self.disabled[v] = True
            self.local[v] = None
        elif q:
            dq, sq = q.min_key()
            gq.insert(v, (dq, sq, v))
            g_inserts = 1

        adj = self.g.out_adj[v]
        disabled, all_settled, local = self.disabled, self.settled, self.local
        rejected = inserted = decreased = evicted = g_decreases = 0
        for z, w in adj:
            if disabled[z] or s in all_settled[z]:
                rejected += 1
                continue
            q = local[z]
            if q is None:
                q = local[z] = self._new_queue()
            nd = d + w
            key = (nd, s)
            outcome = q.offer(s, key)
            if outcome == REJECTED:
                rejected += 1
                continue
            if outcome == DECREASED:
                decreased += 1
            else:
                inserted += 1
                if outcome == EVICTED:
                    evicted += 1
            if q.min_key() is key:
                if z in gq:
                    gq.decrease_key(z, (nd, s, z))
                    g_decreases += 1
                else:
                    gq.insert(z, (nd, s, z))
                    g_inserts += 1

        stats.global_extracts += 1
        stats.local_extracts += 1
        stats.relax_ops += len(adj)
        stats.rejected += rejected
        stats.events_inserted += inserted
        stats.decrease_keys += decreased
        stats.evicted += evicted
        stats.global_inserts += g_inserts
        stats.global_decrease_keys += g_decreases
        return Event(v, s, d)

    def relax(self, z: int, source: int, dist: float) -> None:
        """Offer ``dist`` as a path length from ``source`` into ``z``.

        Same rules as the relaxations performed inside :meth:`step`; exposed
        for driving the engine by hand.
        """
        stats = self.stats
        stats.relax_ops += 1
        self._offer(z, source, dist)

    def _offer(self, z: int, s: int, nd: float) -> None:
        stats = self.stats
        if self.disabled[z] or s in self.settled[z]:
            stats.rejected += 1
            return
        q = self.local[z]
        if q is None:
            q = self.local[z] = self._new_queue()
        key = (nd, s)
        outcome = q.offer(s, key)
        if outcome == REJECTED:
            stats.rejected += 1
            return
        if outcome == DECREASED:
            stats.decrease_keys += 1
        else:
            stats.events_inserted += 1
            stats.evicted += outcome == EVICTED
        if q.min_key() is key:
            gq = self.global_queue
            if z in gq:
                gq.decrease_key(z, (nd, s, z))
                stats.global_decrease_keys += 1
            else:
                gq.insert(z, (nd, s, z))
                stats.global_inserts += 1

    def run(self) -> KnnTable:
        step = self.step
        while step() is not None:
            pass
        return self.table()

    def table(self) -> KnnTable:
        """Rows in settle order, which is already canonical per row."""
        return KnnTable(self.k, [list(r) for r in self.rows])


def knn_all(
    g: Graph, k: int, mode: str = "hashed", stats: RunStats | None = None
) -> KnnTable:
    """k nearest sources of every vertex, by distance from source to vertex.

    >>> g = Graph(3, [(0, 1, 1.0), (1, 2, 1.0)])
    >>> knn_all(g, 2).rows[2]
    [NeighborEntry(source=2, distance=0.0), NeighborEntry(source=1, distance=1.0)]
    """
    return SimultaneousDijkstra(g, k, mode=mode, stats=stats).run()


def knn_from_terminals(
    g: Graph,
    k: int,
    terminals: Iterable[int],
    mode: str = "hashed",
    stats: RunStats | None = None,
) -> KnnTable:
    """Like :func:`knn_all` but only vertices in ``terminals`` act as sources."""
    terminals = sorted(set(terminals))
    if not terminals:
        raise ValueError("terminal set must not be empty")
    return SimultaneousDijkstra(g, k, seeds=terminals, mode=mode, stats=stats).run()
