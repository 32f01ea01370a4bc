"""Write a seeded G(n, m) graph in edgelist or DIMACS format to stdout."""

import argparse
import sys

from graphknn.generate import gnm_graph
from graphknn.graph import write_dimacs, write_edgelist

p = argparse.ArgumentParser(description=__doc__)
p.add_argument("n", type=int)
p.add_argument("m", type=int)
p.add_argument("--seed", type=int, default=0)
p.add_argument("--wmin", type=int, default=1)
p.add_argument("--wmax", type=int, default=100)
p.add_argument("--format", choices=("edgelist", "dimacs"), default="edgelist")
a = p.parse_args()

g = gnm_graph(a.n, a.m, a.seed, (a.wmin, a.wmax))
sys.stdout.write(write_dimacs(g) if a.format == "dimacs" else write_edgelist(g))
