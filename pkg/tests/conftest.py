import pytest

from xcut import build_graph


@pytest.fixture
def d6():
    """Two unit triangles joined by a 0.5 bridge between vertices 2 and 3."""
    return build_graph(6, [(0, 1, 1), (0, 2, 1), (1, 2, 1),
                           (3, 4, 1), (3, 5, 1), (4, 5, 1), (2, 3, 0.5)])


@pytest.fixture
def k2():
    return build_graph(2, [(0, 1, 1)])


@pytest.fixture
def k3():
    return build_graph(3, [(0, 1, 1), (0, 2, 1), (1, 2, 1)])


@pytest.fixture
def p3():
    """Path 0-1-2; its only locally degree-maximal vertex is 1."""
    return build_graph(3, [(0, 1, 1), (1, 2, 1)])


@pytest.fixture
def two_k2():
    """Disconnected: two separate edges."""
    return build_graph(4, [(0, 1, 1), (2, 3, 1)])
