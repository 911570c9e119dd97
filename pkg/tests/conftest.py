"""Shared helpers: networkx conversion, brute-force oracles and hypothesis strategies."""

from __future__ import annotations

from itertools import combinations, permutations

import networkx as nx
import pytest
from hypothesis import strategies as st

from egstab.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges())
    return out


def from_nx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Graph.from_edges(len(index), [(index[u], index[v]) for u, v in h.edges()])


def brute_circumference(g: Graph) -> int:
    """Longest cycle by trying every vertex sequence (fine for n <= 7)."""
    best = 0
    for size in range(3, g.n + 1):
        for subset in combinations(range(g.n), size):
            first, rest = subset[0], subset[1:]
            for perm in permutations(rest):
                cyc = (first,) + perm
                if all(g.has_edge(cyc[i], cyc[(i + 1) % size]) for i in range(size)):
                    best = size
                    break
            if best == size:
                break
    return best


def brute_longest_path(g: Graph, x: int, y: int) -> int:
    """Edges on a longest x-y path, or -1 when x and y are disconnected."""
    best = -1
    others = [v for v in range(g.n) if v not in (x, y)]
    for size in range(len(others) + 1):
        for mid in combinations(others, size):
            for perm in permutations(mid):
                path = (x,) + perm + (y,)
                if all(g.has_edge(path[i], path[i + 1]) for i in range(len(path) - 1)):
                    best = max(best, len(path) - 1)
                    break
    return best


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8, p=None):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    if p is None:
        chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    else:
        chosen = [draw(st.floats(0, 1)) < p for _ in pairs]
    return Graph.from_edges(n, [e for e, c in zip(pairs, chosen) if c])


# -- acceptance reporting ----------------------------------------------------------

_CRITERIA: list[tuple[int, str, bool, str]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion check")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        detail = dict(item.user_properties).get("detail", "")
        if rep.failed and not detail:
            detail = str(call.excinfo.value).splitlines()[0] if call.excinfo else "error"
        _CRITERIA.append((mark.args[0], mark.args[1], rep.passed, detail))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number, title, ok, detail in sorted(_CRITERIA):
        terminalreporter.write_line(f"criterion {number:>2}  {'PASS' if ok else 'FAIL'}  {title}  [{detail}]")
