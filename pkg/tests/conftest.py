import pytest

from ohomresolve import build_complex
from ohomresolve.generators import (
    all_complexes,
    cointerval_complexes,
    iso_representatives,
)


def equivalence_facets():
    """Six-vertex family whose right links of 2 and 3 fail containment."""
    return [[2, 5, 6]] + [[1, a, b] for a in range(3, 7) for b in range(a + 1, 7)]


@pytest.fixture(scope="session")
def K():
    return build_complex([[1, 2, 4], [3, 4]], 4)


@pytest.fixture(scope="session")
def L():
    return build_complex([[1, 2, 4], [1, 2, 5], [3, 4], [3, 5]], 5)


@pytest.fixture(scope="session")
def Lp():
    return build_complex([[1, 2, 4], [3, 4], [3, 5]], 5)


@pytest.fixture(scope="session")
def EQ():
    return build_complex(equivalence_facets(), 6)


@pytest.fixture(scope="session")
def EQ2():
    return build_complex(equivalence_facets() + [[2, 4, 6]], 6)


@pytest.fixture(scope="session")
def zigzag():
    """Cointerval but not shifted: maximal faces {1,3},{2,4},{1,4}."""
    return build_complex([[1, 3], [2, 4], [1, 4]], 4)


@pytest.fixture(scope="session")
def two_edges():
    return build_complex([[1, 2], [3, 4]], 4)


@pytest.fixture(scope="session")
def cointerval4():
    return cointerval_complexes(4)


@pytest.fixture(scope="session")
def cointerval5():
    return cointerval_complexes(5)


@pytest.fixture(scope="session")
def cointerval6():
    return cointerval_complexes(6)


@pytest.fixture(scope="session")
def small_test_complexes():
    """Isomorphism-distinct complexes on at most 3 vertices, all ambient sizes."""
    out = []
    for n in range(4):
        out.extend(iso_representatives(all_complexes(n)))
    return out
