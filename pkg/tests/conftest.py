import pytest

from cmhier import generators


@pytest.fixture(scope="session")
def small_exhaustive():
    """All complexes on ground sets of size 1..4."""
    out = []
    for n in range(1, 5):
        out.extend(generators.exhaustive_complexes(n))
    return out


@pytest.fixture(scope="session")
def exhaustive5():
    return list(generators.exhaustive_complexes(5))


@pytest.fixture(scope="session")
def random67():
    return generators.random_corpus(6, 120, 2024) + generators.random_corpus(7, 120, 2024)


@pytest.fixture(scope="session")
def fano():
    return generators.fano_plane()


@pytest.fixture(scope="session")
def octa():
    return generators.octahedron()
