import pytest

from hypermat import Hypergraph


@pytest.fixture
def h0() -> Hypergraph:
    # two parallel triples on three vertices
    return Hypergraph(3, [[0, 1, 2], [0, 1, 2]])


@pytest.fixture
def h1() -> Hypergraph:
    return Hypergraph(4, [[0, 1, 2], [1, 2, 3], [0, 3]])


@pytest.fixture
def k3() -> Hypergraph:
    return Hypergraph(3, [[0, 1], [1, 2], [0, 2]])


@pytest.fixture
def k4() -> Hypergraph:
    return Hypergraph(4, [[a, b] for a in range(4) for b in range(a + 1, 4)])
