"""Command line: ``graphknn {compute,verify,bench}``.

Exit codes: 0 success, 1 unreadable or invalid input, 2 bad flags,
3 table mismatch in ``verify``.
"""

from __future__ import annotations

import argparse
import statistics
import sys
import time

from .fast import MODES, knn_all, knn_from_terminals
from .generate import gnm_graph
from .graph import (
    FORMATS,
    Graph,
    GraphFormatError,
    KnnTable,
    RunStats,
    format_table,
    guess_format,
    load_graph,
    parse_vertex_set,
    reverse,
)
from .oracle import brute_force_knn
from .randomized import DEFAULT_CONFIDENCE, randomized_knn

EXIT_INPUT, EXIT_USAGE, EXIT_MISMATCH = 1, 2, 3
BENCH_COLUMNS = (
    "k",
    "n",
    "m",
    "wall_nanos",
    "relax_ops",
    "global_extracts",
    "events_inserted",
    "decrease_keys",
)


class UsageError(Exception):
    pass


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _add_problem_args(p: argparse.ArgumentParser, algos: tuple[str, ...]) -> None:
    p.add_argument("input", help="graph file")
    p.add_argument("--k", type=_positive_int, required=True)
    p.add_argument("--algo", choices=algos, default=algos[0])
    p.add_argument("--format", choices=FORMATS, help="default: by extension (.gr = dimacs)")
    p.add_argument(
        "--direction",
        choices=("in", "out"),
        default="in",
        help="in: nearest sources u by dist(u->v); out: nearest targets by dist(v->u)",
    )
    p.add_argument("--mode", choices=MODES, help="membership structure (fast only)")
    p.add_argument("--terminals", help="file of terminal vertex ids, one per line")
    p.add_argument("--seed", type=int, help="randomized only")
    p.add_argument("--confidence", type=float, help="randomized only; at least 3")
    p.add_argument("--stats", action="store_true", help="print counters to stderr")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphknn", description="k nearest neighbors under shortest-path distance"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="print the k-NN table")
    _add_problem_args(compute, ("fast", "randomized", "oracle"))

    verify = sub.add_parser("verify", help="compare an algorithm against the oracle")
    _add_problem_args(verify, ("fast", "randomized"))

    bench = sub.add_parser("bench", help="time runs over a list of k, CSV output")
    bench.add_argument("input", nargs="?", help="graph file; omit to generate G(n, m)")
    bench.add_argument("--format", choices=FORMATS)
    bench.add_argument("--n", type=_positive_int, default=10_000)
    bench.add_argument("--m", type=int, default=100_000)
    bench.add_argument("--wmin", type=_positive_int, default=1)
    bench.add_argument("--wmax", type=_positive_int, default=100)
    bench.add_argument("--graph-seed", type=int, default=0)
    bench.add_argument("--ks", default="1,2,4,8", help="comma-separated k list")
    bench.add_argument("--algo", choices=("fast", "randomized", "oracle"), default="fast")
    bench.add_argument("--mode", choices=MODES, default="hashed")
    bench.add_argument("--reps", type=_positive_int, default=1)
    bench.add_argument("--seed", type=int, default=0, help="randomized only")
    bench.add_argument("--confidence", type=float, default=DEFAULT_CONFIDENCE)
    bench.add_argument("--summary", action="store_true", help="median wall time per k to stderr")
    return parser


def _check_flags(args) -> None:
    if args.algo != "randomized":
        for flag in ("seed", "confidence"):
            if getattr(args, flag) is not None:
                raise UsageError(f"--{flag} applies only to --algo randomized")
    else:
        if args.terminals is not None:
            raise UsageError("--terminals is not supported with --algo randomized")
        if args.confidence is not None and args.confidence < 3:
            raise UsageError("--confidence must be at least 3")
    if args.mode is not None and args.algo != "fast":
        raise UsageError("--mode applies only to --algo fast")


def _load(args) -> tuple[Graph, list[int] | None]:
    fmt = args.format or guess_format(args.input)
    g = load_graph(args.input, fmt)
    terminals = None
    if args.terminals is not None:
        with open(args.terminals) as fh:
            terminals = parse_vertex_set(fh.read(), g.n, base=1 if fmt == "dimacs" else 0)
        if not terminals:
            raise GraphFormatError("terminal file lists no vertices")
    if args.direction == "out":
        g = reverse(g)
    return g, terminals


def _solve(args, g: Graph, terminals, stats: RunStats) -> KnnTable:
    if args.algo == "oracle":
        return brute_force_knn(g, args.k, terminals)
    if args.algo == "randomized":
        conf = DEFAULT_CONFIDENCE if args.confidence is None else args.confidence
        seed = 0 if args.seed is None else args.seed
        return randomized_knn(g, args.k, conf, seed)
    mode = args.mode or "hashed"
    if terminals is not None:
        return knn_from_terminals(g, args.k, terminals, mode, stats)
    return knn_all(g, args.k, mode, stats)


def _print_stats(stats: RunStats) -> None:
    for name, value in stats.as_dict().items():
        print(f"{name}={value}", file=sys.stderr)


def cmd_compute(args) -> int:
    g, terminals = _load(args)
    stats = RunStats()
    table = _solve(args, g, terminals, stats)
    sys.stdout.write(format_table(table))
    if args.stats:
        _print_stats(stats)
    return 0


def cmd_verify(args) -> int:
    g, terminals = _load(args)
    stats = RunStats()
    table = _solve(args, g, terminals, stats)
    expected = brute_force_knn(g, args.k, terminals)
    if args.stats:
        _print_stats(stats)
    diff = table.first_difference(expected)
    if diff is None:
        print(f"ok: {sum(len(r) for r in table.rows)} entries match the oracle")
        return 0
    v, rank, got, want = diff
    print(f"mismatch at vertex {v} rank {rank}: got {_entry(got)}, oracle {_entry(want)}")
    return EXIT_MISMATCH


def _entry(e) -> str:
    return "missing" if e is None else f"(source={e.source}, distance={e.distance!r})"


def cmd_bench(args) -> int:
    try:
        ks = [int(x) for x in args.ks.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad --ks list {args.ks!r}") from None
    if not ks or min(ks) < 1:
        raise UsageError("--ks needs positive integers")
    if args.input is not None:
        g = load_graph(args.input, args.format)
    else:
        try:
            g = gnm_graph(args.n, args.m, args.graph_seed, (args.wmin, args.wmax))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    out = sys.stdout
    out.write(",".join(BENCH_COLUMNS) + "\n")
    walls: dict[int, list[int]] = {}
    for k in ks:
        for _ in range(args.reps):
            stats = RunStats()
            t0 = time.perf_counter_ns()
            if args.algo == "fast":
                knn_all(g, k, args.mode, stats)
            elif args.algo == "randomized":
                randomized_knn(g, k, args.confidence, args.seed)
            else:
                brute_force_knn(g, k)
            wall = time.perf_counter_ns() - t0
            walls.setdefault(k, []).append(wall)
            row = (k, g.n, g.m, wall, stats.relax_ops, stats.global_extracts,
                   stats.events_inserted, stats.decrease_keys)
            out.write(",".join(map(str, row)) + "\n")
            out.flush()
    if args.summary:
        prev = None
        for k in ks:
            med = statistics.median(walls[k])
            ratio = "" if prev is None else f" ratio={med / prev:.2f}"
            print(f"k={k} median_ms={med / 1e6:.1f}{ratio}", file=sys.stderr)
            prev = med
    return 0


COMMANDS = {"compute": cmd_compute, "verify": cmd_verify, "bench": cmd_bench}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command != "bench":
            _check_flags(args)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"graphknn: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphFormatError, OSError) as exc:
        print(f"graphknn: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
