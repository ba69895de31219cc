import random

import pytest

from safeset import Graph


def random_connected_graph(rng: random.Random, order: int, extra_p: float) -> Graph:
    """Random spanning tree plus independent extra edges."""
    edges = set()
    verts = list(range(order))
    rng.shuffle(verts)
    for k in range(1, order):
        u, v = verts[k], verts[rng.randrange(k)]
        edges.add((min(u, v), max(u, v)))
    for u in range(order):
        for v in range(u + 1, order):
            if (u, v) not in edges and rng.random() < extra_p:
                edges.add((u, v))
    return Graph.from_edges(order, sorted(edges))


@pytest.fixture
def rng():
    return random.Random(20261015)


ACCEPTANCE_LINES: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py::" in report.nodeid:
        name = report.nodeid.split("::")[-1]
        ACCEPTANCE_LINES[name] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for name, status in sorted(ACCEPTANCE_LINES.items()):
        terminalreporter.write_line(f"{status}  {name}")
