import random
from itertools import combinations

import pytest

from mpolykit.graph import Graph


def cycle(n):
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)])


def path(n):
    return Graph(range(n), [(i, i + 1) for i in range(n - 1)])


def complete(n):
    return Graph(range(n), combinations(range(n), 2))


def hypercube(d):
    return Graph(range(2**d), [(v, v ^ (1 << b)) for v in range(2**d) for b in range(d) if v < v ^ (1 << b)])


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(range(10), outer + spokes + inner)


def random_connected(rng, n, extra=0.15, min_degree=1):
    """Random spanning tree plus extra edges; raise min degree by joining low-degree vertices."""
    order = list(range(n))
    rng.shuffle(order)
    edges = set()
    for k in range(1, n):
        u, v = order[k], order[rng.randrange(k)]
        edges.add((min(u, v), max(u, v)))
    for u, v in combinations(range(n), 2):
        if rng.random() < extra / max(1, n / 8):
            edges.add((u, v))
    deg = {v: 0 for v in range(n)}
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    for v in range(n):
        while deg[v] < min_degree:
            w = rng.choice([w for w in range(n) if w != v and (min(v, w), max(v, w)) not in edges])
            edges.add((min(v, w), max(v, w)))
            deg[v] += 1
            deg[w] += 1
    return Graph(range(n), edges)


@pytest.fixture
def rng():
    return random.Random(20181003)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
