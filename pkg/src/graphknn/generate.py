"""Seeded random graphs for tests and benchmarks."""

from __future__ import annotations

import random

from .graph import Graph


def gnm_graph(
    n: int,
    m: int,
    seed: int = 0,
    weight_range: tuple[int, int] = (1, 100),
    allow_self_loops: bool = False,
) -> Graph:
    """G(n, m): ``m`` distinct directed edges drawn uniformly, integer weights
    uniform in the inclusive ``weight_range``."""
    lo, hi = weight_range
    if lo < 1 or hi < lo:
        raise ValueError("weight range must satisfy 1 <= lo <= hi")
    pairs = n * n if allow_self_loops else n * (n - 1)
    if m > pairs:
        raise ValueError(f"cannot place {m} distinct edges on {n} vertices")
    rng = random.Random(seed)
    if m > pairs // 2:
        # dense: sample from the explicit pair list
        cand = [(u, v) for u in range(n) for v in range(n) if allow_self_loops or u != v]
        chosen = rng.sample(cand, m)
    else:
        seen: set[tuple[int, int]] = set()
        chosen = []
        while len(chosen) < m:
            u = rng.randrange(n)
            v = rng.randrange(n)
            if (u == v and not allow_self_loops) or (u, v) in seen:
                continue
            seen.add((u, v))
            chosen.append((u, v))
    return Graph(n, [(u, v, float(rng.randint(lo, hi))) for u, v in chosen])


def random_multigraph(n: int, m: int, seed: int = 0, weight_range=(1, 100)) -> Graph:
    """``m`` independent uniform edges; self-loops and parallel edges allowed."""
    lo, hi = weight_range
    rng = random.Random(seed)
    if n == 0:
        return Graph(0)
    edges = [
        (rng.randrange(n), rng.randrange(n), float(rng.randint(lo, hi)))
        for _ in range(m)
    ]
    return Graph(n, edges)
