import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from smallgraphs import catalog_up_to, connected_catalog, edges_of  # noqa: E402


@pytest.fixture(scope="session")
def catalog5():
    return [(n, edges_of(adj)) for n, adj in catalog_up_to(5)]


@pytest.fixture(scope="session")
def catalog7():
    """(n, edge list) for every connected graph with n <= 7, one per class."""
    return [(n, edges_of(adj)) for n, adj in catalog_up_to(7)]


@pytest.fixture(scope="session")
def catalog8():
    return [(8, edges_of(adj)) for adj in connected_catalog(8)]
