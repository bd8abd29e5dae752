"""Shared graphs and the named and random test corpus."""

from typing import List, Tuple

import numpy as np
import pytest

from src.families import (
    complete,
    complete_bipartite,
    cycle,
    hamming,
    hypercube,
    kneser,
    load_fixture,
    odd_graph,
    path,
)
from src.graphs import Graph

RANDOM_GRAPH_COUNT = 200
RANDOM_GRAPH_SEED = 20240611


def random_connected_graph(rng: np.random.Generator, n: int, density: float) -> Graph:
    """Random spanning tree plus each remaining pair with probability ``density``."""
    edges = {(int(rng.integers(0, v)), v) for v in range(1, n)}
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < density:
                edges.add((u, v))
    return Graph.from_edges(n, edges)


def random_connected_graphs(count: int, seed: int) -> List[Graph]:
    rng = np.random.default_rng(seed)
    graphs = []
    for _ in range(count):
        n = int(rng.integers(2, 13))
        density = float(rng.choice([0.1, 0.25, 0.5, 0.8]))
        graphs.append(random_connected_graph(rng, n, density))
    return graphs


def named_corpus() -> List[Tuple[str, Graph]]:
    graphs = [(f"K{n}", complete(n)) for n in range(2, 7)]
    graphs += [(f"C{n}", cycle(n)) for n in range(4, 10)]
    graphs += [(f"Q{k}", hypercube(k)) for k in range(1, 6)]
    graphs += [(f"O{k}", odd_graph(k)) for k in range(2, 5)]
    graphs += [
        ("H(2,3)", hamming(2, 3)),
        ("K3,3", complete_bipartite(3, 3)),
        ("petersen", kneser(5, 2)),
        ("wells", load_fixture("wells")),
        ("P4", path(4)),
    ]
    return graphs


@pytest.fixture(scope="session")
def corpus() -> List[Tuple[str, Graph]]:
    """Named families plus the seeded random connected graphs."""
    randoms = random_connected_graphs(RANDOM_GRAPH_COUNT, RANDOM_GRAPH_SEED)
    return named_corpus() + [(f"random-{i}", g) for i, g in enumerate(randoms)]


@pytest.fixture(scope="session")
def named_graphs() -> List[Tuple[str, Graph]]:
    return named_corpus()


@pytest.fixture
def k2() -> Graph:
    return complete(2)


@pytest.fixture
def q3() -> Graph:
    return hypercube(3)


@pytest.fixture
def o4() -> Graph:
    return odd_graph(4)


@pytest.fixture
def petersen() -> Graph:
    return kneser(5, 2)


@pytest.fixture
def c5() -> Graph:
    return cycle(5)


@pytest.fixture
def wells() -> Graph:
    return load_fixture("wells")
