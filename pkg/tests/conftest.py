from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import strategies as st

from eccbounds.graph import Graph, from_edge_list, is_connected


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edge_list(n, [p for p, keep in zip(pairs, chosen) if keep])


@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 8) -> Graph:
    """A random spanning tree plus random extra edges."""
    n = draw(st.integers(min_n, max_n))
    order = draw(st.permutations(range(n)))
    edges = set()
    for i in range(1, n):
        parent = order[draw(st.integers(0, i - 1))]
        edges.add(tuple(sorted((order[i], parent))))
    for p in combinations(range(n), 2):
        if draw(st.booleans()):
            edges.add(p)
    g = from_edge_list(n, sorted(edges))
    assert is_connected(g)
    return g


@pytest.fixture(scope="session")
def sweep7():
    """The full n <= 7 sweep, shared by every test that needs it."""
    from eccbounds.sweep import SweepConfig, default_workers, sweep

    return sweep(SweepConfig(n_min=2, n_max=7, worker_count=default_workers()))


# criterion number -> (title, passed, detail); filled by test_acceptance.py
ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


def record(number: int, title: str, passed: bool, detail: str) -> None:
    ACCEPTANCE[number] = (title, passed, detail)
    print(f"criterion {number} ({title}): {'PASS' if passed else 'FAIL'} - {detail}")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, passed, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {number}. {title}: {detail}")
