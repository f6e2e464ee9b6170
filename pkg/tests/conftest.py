import random

import pytest

from p4recon.graph_core import Graph, complete_graph, cycle_graph, disjoint_union, path_graph


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow exhaustive tests")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def thin_spider(k: int) -> Graph:
    """Clique 0..k-1, leg k+i attached to i."""
    edges = [(i, j) for j in range(k) for i in range(j)]
    edges += [(i, k + i) for i in range(k)]
    return Graph.from_edges(2 * k, edges)


def random_graph(n: int, rng: random.Random, p: float = 0.5) -> Graph:
    return Graph.from_edges(n, [(i, j) for j in range(n) for i in range(j) if rng.random() < p])


@pytest.fixture
def rng():
    return random.Random(20081024)


P4 = path_graph(4)
P5 = path_graph(5)
C4 = cycle_graph(4)
C5 = cycle_graph(5)
C6 = cycle_graph(6)
K2 = complete_graph(2)
K3 = complete_graph(3)
K1 = complete_graph(1)
P4_PLUS_K1 = disjoint_union(P4, K1)
