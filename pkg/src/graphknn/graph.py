"""Directed graphs with positive edge weights, their two text formats, and
the ordering conventions every k-NN routine in this package shares."""

from __future__ import annotations

import io
import math
from dataclasses import dataclass, field
from typing import IO, Iterable, NamedTuple, Sequence

FORMATS = ("edgelist", "dimacs")


class GraphFormatError(ValueError):
    """Raised when graph input is malformed; carries the offending line."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class Graph:
    """Immutable directed graph.

    ``out_adj[u]`` is a tuple of ``(target, weight)`` pairs in input order.
    Weights are finite floats strictly greater than zero; self-loops and
    parallel edges are allowed.
    """

    __slots__ = ("n", "m", "out_adj", "_in_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int, float]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj: list[list[tuple[int, float]]] = [[] for _ in range(n)]
        m = 0
        for u, v, w in edges:
            _check_edge(n, u, v, w)
            adj[u].append((v, float(w)))
            m += 1
        self.n = n
        self.m = m
        self.out_adj: tuple[tuple[tuple[int, float], ...], ...] = tuple(
            tuple(row) for row in adj
        )
        self._in_adj = None

    @property
    def in_adj(self) -> tuple[tuple[tuple[int, float], ...], ...]:
        """Transposed adjacency, built on first access."""
        if self._in_adj is None:
            rev: list[list[tuple[int, float]]] = [[] for _ in range(self.n)]
            for u, row in enumerate(self.out_adj):
                for v, w in row:
                    rev[v].append((u, w))
            self._in_adj = tuple(tuple(row) for row in rev)
        return self._in_adj

    def edges(self) -> Iterable[tuple[int, int, float]]:
        for u, row in enumerate(self.out_adj):
            for v, w in row:
                yield u, v, w

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _check_edge(n: int, u: int, v: int, w: float) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise ValueError(f"edge ({u}, {v}) has a vertex outside [0, {n})")
    if not (w > 0 and math.isfinite(w)):
        raise ValueError(f"edge ({u}, {v}) has non-positive or non-finite weight {w!r}")


def reverse(g: Graph) -> Graph:
    """Transpose: every edge u->v becomes v->u with the same weight."""
    return Graph(g.n, ((v, u, w) for u, v, w in g.edges()))


def edge_multiset(g: Graph) -> dict[tuple[int, int, float], int]:
    counts: dict[tuple[int, int, float], int] = {}
    for e in g.edges():
        counts[e] = counts.get(e, 0) + 1
    return counts


class NeighborEntry(NamedTuple):
    source: int
    distance: float


def canonical_less(a: tuple[float, int], b: tuple[float, int]) -> bool:
    """Strict (distance, source id) order; ties in distance go to the lower id."""
    return a[0] < b[0] or (a[0] == b[0] and a[1] < b[1])


@dataclass
class KnnTable:
    """Row ``v`` lists up to ``k`` sources ordered by ``(distance, source)``,
    where distance is measured from the source to ``v``."""

    k: int
    rows: list[list[NeighborEntry]] = field(default_factory=list)

    @property
    def n(self) -> int:
        return len(self.rows)

    def entries(self) -> Iterable[tuple[int, int, int, float]]:
        for v, row in enumerate(self.rows):
            for rank, (s, d) in enumerate(row):
                yield v, rank, s, d

    def first_difference(self, other: "KnnTable"):
        """First ``(vertex, rank, mine, theirs)`` where the tables disagree, else None.

        A missing entry is reported as None on that side.
        """
        for v in range(max(self.n, other.n)):
            a = self.rows[v] if v < self.n else []
            b = other.rows[v] if v < other.n else []
            for rank in range(max(len(a), len(b))):
                x = a[rank] if rank < len(a) else None
                y = b[rank] if rank < len(b) else None
                if x != y:
                    return v, rank, x, y
        return None


@dataclass
class RunStats:
    relax_ops: int = 0
    global_extracts: int = 0
    local_extracts: int = 0
    events_inserted: int = 0
    decrease_keys: int = 0
    global_inserts: int = 0
    global_decrease_keys: int = 0
    rejected: int = 0
    evicted: int = 0

    def as_dict(self) -> dict[str, int]:
        return dict(self.__dict__)


# -- parsing ---------------------------------------------------------------


def _data_lines(stream: IO[str], comment: str):
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith(comment):
            continue
        yield lineno, line.split()


def _int(tok: str, lineno: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphFormatError(f"{what} {tok!r} is not an integer", lineno) from None


def _weight(tok: str, lineno: int, integer: bool) -> float:
    try:
        w = float(int(tok)) if integer else float(tok)
    except ValueError:
        kind = "an integer" if integer else "a number"
        raise GraphFormatError(f"weight {tok!r} is not {kind}", lineno) from None
    if not math.isfinite(w):
        raise GraphFormatError(f"weight {tok!r} is not finite", lineno)
    if w <= 0:
        raise GraphFormatError(f"non-positive weight {tok}", lineno)
    return w


def _vertex(tok: str, lineno: int, n: int, base: int) -> int:
    v = _int(tok, lineno, "vertex id") - base
    if not 0 <= v < n:
        raise GraphFormatError(f"vertex id {tok} out of range", lineno)
    return v


def _parse_edgelist(stream: IO[str]) -> Graph:
    lines = _data_lines(stream, "#")
    header = next(lines, None)
    if header is None:
        raise GraphFormatError("missing 'n m' header")
    lineno, toks = header
    if len(toks) != 2:
        raise GraphFormatError("header must be 'n m'", lineno)
    n = _int(toks[0], lineno, "vertex count")
    m = _int(toks[1], lineno, "edge count")
    if n < 0 or m < 0:
        raise GraphFormatError("negative count in header", lineno)
    edges = []
    for lineno, toks in lines:
        if len(toks) != 3:
            raise GraphFormatError("edge line must be 'u v w'", lineno)
        if len(edges) == m:
            raise GraphFormatError(f"more than the declared {m} edges", lineno)
        u = _vertex(toks[0], lineno, n, 0)
        v = _vertex(toks[1], lineno, n, 0)
        edges.append((u, v, _weight(toks[2], lineno, integer=False)))
    if len(edges) != m:
        raise GraphFormatError(f"declared {m} edges but found {len(edges)}", lineno)
    return Graph(n, edges)


def _parse_dimacs(stream: IO[str]) -> Graph:
    n = m = None
    edges = []
    lineno = 0
    for lineno, toks in _data_lines(stream, "c"):
        tag = toks[0]
        if tag == "p":
            if n is not None:
                raise GraphFormatError("duplicate problem line", lineno)
            if len(toks) != 4 or toks[1] != "sp":
                raise GraphFormatError("problem line must be 'p sp n m'", lineno)
            n = _int(toks[2], lineno, "vertex count")
            m = _int(toks[3], lineno, "edge count")
            if n < 0 or m < 0:
                raise GraphFormatError("negative count in problem line", lineno)
        elif tag == "a":
            if n is None:
                raise GraphFormatError("arc before problem line", lineno)
            if len(toks) != 4:
                raise GraphFormatError("arc line must be 'a u v w'", lineno)
            if len(edges) == m:
                raise GraphFormatError(f"more than the declared {m} arcs", lineno)
            u = _vertex(toks[1], lineno, n, 1)
            v = _vertex(toks[2], lineno, n, 1)
            edges.append((u, v, _weight(toks[3], lineno, integer=True)))
        else:
            raise GraphFormatError(f"unknown line type {tag!r}", lineno)
    if n is None:
        raise GraphFormatError("missing 'p sp n m' line")
    if len(edges) != m:
        raise GraphFormatError(f"declared {m} arcs but found {len(edges)}", lineno)
    return Graph(n, edges)


def parse_graph(data: bytes | str | IO, format: str = "edgelist") -> Graph:
    """Parse a graph from bytes, text, or an open stream.

    Vertex ids are 0-based in the result whatever the input convention.
    Raises GraphFormatError, with the line number where one applies.
    """
    if isinstance(data, bytes):
        data = data.decode()
    if isinstance(data, str):
        data = io.StringIO(data)
    elif hasattr(data, "mode") and "b" in getattr(data, "mode", ""):
        data = io.TextIOWrapper(data)
    if format == "edgelist":
        return _parse_edgelist(data)
    if format == "dimacs":
        return _parse_dimacs(data)
    raise ValueError(f"unknown graph format {format!r}; expected one of {FORMATS}")


def load_graph(path: str, format: str | None = None) -> Graph:
    if format is None:
        format = guess_format(path)
    with open(path) as fh:
        return parse_graph(fh, format)


def guess_format(path: str) -> str:
    return "dimacs" if path.endswith((".gr", ".dimacs")) else "edgelist"


def write_edgelist(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out += [f"{u} {v} {format_distance(w)}" for u, v, w in g.edges()]
    return "\n".join(out) + "\n"


def write_dimacs(g: Graph) -> str:
    out = [f"p sp {g.n} {g.m}"]
    for u, v, w in g.edges():
        if not w.is_integer():
            raise ValueError("DIMACS weights must be integers")
        out.append(f"a {u + 1} {v + 1} {int(w)}")
    return "\n".join(out) + "\n"


def format_distance(d: float) -> str:
    """Shortest round-trip decimal; integral values carry no decimal point."""
    if d.is_integer() and abs(d) < 2**53:
        return str(int(d))
    return repr(d)


def parse_vertex_set(text: str, n: int, base: int = 0) -> list[int]:
    """One vertex id per line; blank and '#'/'c' comment lines are skipped."""
    out = []
    seen = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line[0] in "#c":
            continue
        v = _vertex(line, lineno, n, base)
        if v not in seen:
            seen.add(v)
            out.append(v)
    return sorted(out)


def check_vertices(n: int, vertices: Sequence[int]) -> None:
    for v in vertices:
        if not 0 <= v < n:
            raise ValueError(f"vertex {v} outside [0, {n})")


def format_table(table: KnnTable) -> str:
    """One ``v<TAB>rank<TAB>source<TAB>distance`` line per entry."""
    return "".join(
        f"{v}\t{rank}\t{s}\t{format_distance(d)}\n" for v, rank, s, d in table.entries()
    )


def parse_table(text: str, n: int, k: int) -> KnnTable:
    """Inverse of :func:`format_table` for a table over ``n`` vertices."""
    rows: list[list[NeighborEntry]] = [[] for _ in range(n)]
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 4:
            raise GraphFormatError("table line must have 4 tab-separated fields", lineno)
        v, rank, s = (_int(p, lineno, "field") for p in parts[:3])
        if not 0 <= v < n or rank != len(rows[v]):
            raise GraphFormatError("table lines out of order", lineno)
        rows[v].append(NeighborEntry(s, float(parts[3])))
    return KnnTable(k, rows)
