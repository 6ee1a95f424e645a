import random

import pytest

from imsep.gadgets import banner
from imsep.graph import Graph
from imsep.sat import parse_dimacs_cnf

FIG3_DIMACS = """c (~x1 | x2 | ~x5) & (~x3 | ~x4 | x5)
p cnf 5 2
-1 2 -5 0
-3 -4 5 0
"""


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n):
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def random_connected_graph(rng, n_min=2, n_max=10):
    """Random spanning tree plus extra edges at a random density."""
    n = rng.randint(n_min, n_max)
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    p = rng.random()
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p * 0.6:
                edges.add((u, v))
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph(n, [(perm[u], perm[v]) for u, v in edges])


@pytest.fixture
def banner_graph():
    return banner()


@pytest.fixture
def path5():
    return path_graph(5)


@pytest.fixture
def fig3():
    return parse_dimacs_cnf(FIG3_DIMACS)


@pytest.fixture
def rng():
    return random.Random(20231)
