import random

import pytest
from hypothesis import strategies as st

from graphknn.generate import gnm_graph, random_multigraph
from graphknn.graph import Graph


def path_graph(n=3, w=1.0):
    return Graph(n, [(i, i + 1, w) for i in range(n - 1)])


CORPUS_SIZE = 100
_DENSITY = (1, 3, 10, 20, 4000)  # edge budget per vertex, by i % 5


def corpus_graph(i: int) -> Graph:
    """Graph ``i`` of the seeded test corpus.

    n in 1..200, m up to 4000, integer weights in [1, 100]. The edge budget
    cycles through sparse to dense; every third graph draws weights from
    {1, 2, 3} so equal distances are common, and every fourth is a
    multigraph with self-loops and parallel edges.
    """
    rng = random.Random(1000 + i)
    n = rng.randint(1, 200)
    cap = min(4000, n * (n - 1))
    m = rng.randint(0, min(cap, _DENSITY[i % 5] * n))
    weights = (1, 3) if i % 3 == 0 else (1, 100)
    if i % 4 == 0:
        return random_multigraph(n, m, seed=i, weight_range=weights)
    return gnm_graph(n, m, seed=i, weight_range=weights)


@st.composite
def graphs(draw, max_n=12, max_m=40, max_w=5):
    """Small multigraphs with a narrow weight range to force ties."""
    n = draw(st.integers(1, max_n))
    vertex = st.integers(0, n - 1)
    edges = draw(
        st.lists(
            st.tuples(vertex, vertex, st.integers(1, max_w).map(float)),
            max_size=max_m,
        )
    )
    return Graph(n, edges)


@pytest.fixture
def path3():
    return path_graph(3)


_results: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def criterion(request):
    """Record a one-line pass/fail verdict for the acceptance summary."""
    name = request.node.name.removeprefix("test_")
    detail: dict[str, str] = {"text": ""}
    yield detail
    rep = getattr(request.node, "rep_call", None)
    passed = rep is not None and rep.passed
    _results[name] = (passed, detail["text"])


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for name, (passed, text) in _results.items():
        mark = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{mark}] {name}" + (f": {text}" if text else ""))
