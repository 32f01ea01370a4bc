"""How often the sampling algorithm misses a neighbor when given fewer rounds.

Sweeps the round count as a fraction of ceil(10 c k ln n) and reports the
fraction of seeds whose table differs from the exact one, plus the mean
number of true neighbors absent from the output. A missed neighbor is
usually replaced by the next-nearest source, so rows rarely get shorter.
"""

import argparse
from dataclasses import dataclass, field

from graphknn.generate import gnm_graph
from graphknn.oracle import brute_force_knn
from graphknn.randomized import randomized_knn, round_count


@dataclass
class RoundsConfig:
    n: int = 120
    m: int = 480
    k: int = 5
    c: float = 4.0
    seeds: int = 40
    fractions: list[float] = field(default_factory=lambda: [0.01, 0.02, 0.05, 0.1, 0.25, 1.0])
    graph_seed: int = 3


def sweep(cfg: RoundsConfig):
    g = gnm_graph(cfg.n, cfg.m, seed=cfg.graph_seed, weight_range=(1, 20))
    truth = brute_force_knn(g, cfg.k)
    full = round_count(cfg.n, cfg.k, cfg.c)
    for frac in cfg.fractions:
        rounds = max(1, round(frac * full))
        failed = missing = 0
        for seed in range(cfg.seeds):
            t = randomized_knn(g, cfg.k, cfg.c, seed, rounds=rounds)
            failed += t != truth
            missing += sum(len(set(a) - set(b)) for a, b in zip(truth.rows, t.rows))
        yield frac, rounds, failed / cfg.seeds, missing / cfg.seeds


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, default=RoundsConfig.n)
    p.add_argument("--m", type=int, default=RoundsConfig.m)
    p.add_argument("--k", type=int, default=RoundsConfig.k)
    p.add_argument("--c", type=float, default=RoundsConfig.c)
    p.add_argument("--seeds", type=int, default=RoundsConfig.seeds)
    a = p.parse_args()
    cfg = RoundsConfig(a.n, a.m, a.k, a.c, a.seeds)
    print(f"{'fraction':>8} {'rounds':>7} {'fail_rate':>9} {'mean_missing':>12}")
    for frac, rounds, rate, miss in sweep(cfg):
        print(f"{frac:>8.2f} {rounds:>7} {rate:>9.3f} {miss:>12.2f}")


if __name__ == "__main__":
    main()
