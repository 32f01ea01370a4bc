"""Wall time and operation counts of the fast engine as k doubles.

    python scripts/scaling.py --n 10000 --m 100000 --ks 2,4,8,16 --reps 5
"""

import argparse
import statistics
import time
from dataclasses import dataclass

from graphknn.fast import knn_all
from graphknn.generate import gnm_graph
from graphknn.graph import RunStats


@dataclass
class ScalingConfig:
    n: int = 10_000
    m: int = 100_000
    ks: tuple[int, ...] = (2, 4, 8, 16)
    reps: int = 5
    seed: int = 7
    mode: str = "hashed"


def run(cfg: ScalingConfig) -> list[dict]:
    g = gnm_graph(cfg.n, cfg.m, seed=cfg.seed)
    results = []
    for k in cfg.ks:
        walls = []
        for _ in range(cfg.reps):
            stats = RunStats()
            t0 = time.perf_counter()
            knn_all(g, k, cfg.mode, stats)
            walls.append(time.perf_counter() - t0)
        results.append({"k": k, "median_s": statistics.median(walls), **stats.as_dict()})
    return results


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, default=ScalingConfig.n)
    p.add_argument("--m", type=int, default=ScalingConfig.m)
    p.add_argument("--ks", default="2,4,8,16")
    p.add_argument("--reps", type=int, default=ScalingConfig.reps)
    p.add_argument("--seed", type=int, default=ScalingConfig.seed)
    p.add_argument("--mode", choices=("hashed", "bounded"), default="hashed")
    a = p.parse_args()
    cfg = ScalingConfig(a.n, a.m, tuple(int(x) for x in a.ks.split(",")), a.reps, a.seed, a.mode)

    print(f"{'k':>4} {'median_s':>9} {'ratio':>6} {'relax/(k m)':>12} {'extracts/(k n)':>15}")
    prev = None
    for r in run(cfg):
        ratio = "" if prev is None else f"{r['median_s'] / prev:.2f}"
        print(
            f"{r['k']:>4} {r['median_s']:>9.3f} {ratio:>6} "
            f"{r['relax_ops'] / (r['k'] * cfg.m):>12.3f} "
            f"{r['global_extracts'] / (r['k'] * cfg.n):>15.3f}"
        )
        prev = r["median_s"]


if __name__ == "__main__":
    main()
