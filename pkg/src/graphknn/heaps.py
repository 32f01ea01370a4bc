"""Addressable min-queues used by the simultaneous Dijkstra engine.

Keys are ``(distance, id)`` tuples so that plain tuple comparison is the
canonical order. Every item appears at most once per queue.
"""

from __future__ import annotations

import heapq
from bisect import bisect_left, insort
from typing import Hashable

# outcomes of ``offer``
REJECTED, INSERTED, DECREASED, EVICTED = 0, 1, 2, 3


class AddressableHeap:
    """Binary min-heap with a position index for O(log n) decrease-key."""

    __slots__ = ("_keys", "_items", "_pos")

    def __init__(self):
        self._keys: list = []
        self._items: list = []
        self._pos: dict = {}

    def __len__(self) -> int:
        return len(self._keys)

    def __bool__(self) -> bool:
        return bool(self._keys)

    def __contains__(self, item: Hashable) -> bool:
        return item in self._pos

    def key_of(self, item: Hashable):
        return self._keys[self._pos[item]]

    def min(self):
        """``(item, key)`` of the minimum; IndexError when empty."""
        return self._items[0], self._keys[0]

    def min_key(self):
        return self._keys[0]

    def insert(self, item: Hashable, key) -> None:
        if item in self._pos:
            raise KeyError(f"{item!r} already queued")
        self._keys.append(key)
        self._items.append(item)
        self._sift_up(len(self._keys) - 1, key, item)

    def decrease_key(self, item: Hashable, key) -> None:
        i = self._pos[item]
        if not key < self._keys[i]:
            raise ValueError("new key is not smaller than the current key")
        self._sift_up(i, key, item)

    def offer(self, item: Hashable, key) -> int:
        """Insert ``item``, or decrease its key if ``key`` is smaller."""
        i = self._pos.get(item)
        if i is None:
            self._keys.append(key)
            self._items.append(item)
            self._sift_up(len(self._keys) - 1, key, item)
            return INSERTED
        if key < self._keys[i]:
            self._sift_up(i, key, item)
            return DECREASED
        return REJECTED

    def pop(self):
        """Remove and return ``(item, key)`` of the minimum."""
        keys, items = self._keys, self._items
        top_key, top_item = keys[0], items[0]
        del self._pos[top_item]
        last_key = keys.pop()
        last_item = items.pop()
        if keys:
            self._sift_down(0, last_key, last_item)
        return top_item, top_key

    def clear(self) -> None:
        self._keys.clear()
        self._items.clear()
        self._pos.clear()

    def _sift_up(self, i: int, key, item) -> None:
        keys, items, pos = self._keys, self._items, self._pos
        while i:
            parent = (i - 1) >> 1
            pkey = keys[parent]
            if not key < pkey:
                break
            keys[i] = pkey
            pitem = items[parent]
            items[i] = pitem
            pos[pitem] = i
            i = parent
        keys[i] = key
        items[i] = item
        pos[item] = i

    def _sift_down(self, i: int, key, item) -> None:
        keys, items, pos = self._keys, self._items, self._pos
        size = len(keys)
        child = 2 * i + 1
        while child < size:
            right = child + 1
            if right < size and keys[right] < keys[child]:
                child = right
            ckey = keys[child]
            if not ckey < key:
                break
            keys[i] = ckey
            citem = items[child]
            items[i] = citem
            pos[citem] = i
            i = child
            child = 2 * i + 1
        keys[i] = key
        items[i] = item
        pos[item] = i


class LazyHeap:
    """Addressable min-queue over heapq with lazy decrease-key.

    A decrease pushes the new key and leaves the old one behind; superseded
    keys are discarded when they reach the top. Items are the second key field.
    ``len`` counts live items only.
    """

    __slots__ = ("_heap", "_live")

    def __init__(self):
        self._heap: list = []
        self._live: dict = {}

    def __len__(self) -> int:
        return len(self._live)

    def __bool__(self) -> bool:
        return bool(self._live)

    def __contains__(self, item) -> bool:
        return item in self._live

    def key_of(self, item):
        return self._live[item]

    def insert(self, item, key) -> None:
        if item in self._live:
            raise KeyError(f"{item!r} already queued")
        self._live[item] = key
        heapq.heappush(self._heap, key)

    def decrease_key(self, item, key) -> None:
        if not key < self._live[item]:
            raise ValueError("new key is not smaller than the current key")
        self._live[item] = key
        heapq.heappush(self._heap, key)

    def offer(self, item, key) -> int:
        live = self._live
        old = live.get(item)
        if old is None:
            live[item] = key
            heapq.heappush(self._heap, key)
            return INSERTED
        if key < old:
            live[item] = key
            heapq.heappush(self._heap, key)
            return DECREASED
        return REJECTED

    def _prune(self) -> None:
        # keeps the top of the heap live whenever any item is live
        heap, live = self._heap, self._live
        while heap and live.get(heap[0][1]) is not heap[0]:
            heapq.heappop(heap)

    def min_key(self):
        return self._heap[0]

    def min(self):
        key = self._heap[0]
        return key[1], key

    def pop(self):
        key = heapq.heappop(self._heap)
        del self._live[key[1]]
        self._prune()
        return key[1], key

    def clear(self) -> None:
        self._heap.clear()
        self._live.clear()


class BoundedQueue:
    """Sorted store retaining only the ``capacity`` smallest keys.

    Keys are ``(distance, source)``; the source is the item. Offers that
    would not rank among the retained keys are refused, and an insertion
    beyond capacity evicts the current largest key. Lookup by source goes
    through a second sorted list, so no hashing is involved.
    """

    __slots__ = ("capacity", "_keys", "_by_source")

    def __init__(self, capacity: int):
        if capacity < 1:
            raise ValueError("capacity must be positive")
        self.capacity = capacity
        self._keys: list[tuple[float, int]] = []
        # (source, distance), sorted by source
        self._by_source: list[tuple[int, float]] = []

    def __len__(self) -> int:
        return len(self._keys)

    def __bool__(self) -> bool:
        return bool(self._keys)

    def _find(self, source: int) -> int:
        entries = self._by_source
        i = bisect_left(entries, (source,))
        if i < len(entries) and entries[i][0] == source:
            return i
        return -1

    def __contains__(self, source: int) -> bool:
        return self._find(source) >= 0

    def key_of(self, source: int) -> tuple[float, int]:
        i = self._find(source)
        if i < 0:
            raise KeyError(source)
        return self._by_source[i][1], source

    def min(self):
        key = self._keys[0]
        return key[1], key

    def min_key(self) -> tuple[float, int]:
        return self._keys[0]

    def accepts(self, key: tuple[float, int]) -> bool:
        """False if the store is full and ``key`` is not below its largest key."""
        keys = self._keys
        return len(keys) < self.capacity or key < keys[-1]

    def insert(self, source: int, key: tuple[float, int]):
        """Insert and return the evicted key, if any."""
        if self._find(source) >= 0:
            raise KeyError(f"{source!r} already queued")
        insort(self._keys, key)
        insort(self._by_source, (source, key[0]))
        if len(self._keys) > self.capacity:
            evicted = self._keys.pop()
            del self._by_source[self._find(evicted[1])]
            return evicted
        return None

    def offer(self, source: int, key: tuple[float, int]) -> int:
        i = self._find(source)
        if i < 0:
            if not self.accepts(key):
                return REJECTED
            return INSERTED if self.insert(source, key) is None else EVICTED
        if key < (self._by_source[i][1], source):
            self.decrease_key(source, key)
            return DECREASED
        return REJECTED

    def decrease_key(self, source: int, key: tuple[float, int]) -> None:
        i = self._find(source)
        old = (self._by_source[i][1], source)
        if not key < old:
            raise ValueError("new key is not smaller than the current key")
        keys = self._keys
        del keys[bisect_left(keys, old)]
        insort(keys, key)
        self._by_source[i] = (source, key[0])

    def pop(self):
        key = self._keys.pop(0)
        del self._by_source[self._find(key[1])]
        return key[1], key

    def clear(self) -> None:
        self._keys.clear()
        self._by_source.clear()
