import os

import pytest

from forge.complexes.constructions import simplex_boundary
from forge.complexes.simplicial_complex import SimplicialComplex
from forge.config_space.config_space import build_config_space
from forge.params import balanced_params


@pytest.fixture(scope="session")
def space_2_2():
    return build_config_space(balanced_params(2, 2))


@pytest.fixture(scope="session")
def space_2_3():
    return build_config_space(balanced_params(2, 3))


@pytest.fixture
def triangle_boundary() -> SimplicialComplex:
    return simplex_boundary(range(3))


@pytest.fixture
def projective_plane() -> SimplicialComplex:
    """
    Six-vertex triangulation of the real projective plane.
    """
    facets = [
        [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1],
        [1, 2, 4], [2, 3, 5], [3, 4, 1], [4, 5, 2], [5, 1, 3],
    ]
    return SimplicialComplex(range(6), facets)


@pytest.fixture
def resource():
    """
    Path of a JSON fixture under test/resources.
    """
    folder = os.path.join(os.path.dirname(__file__), "resources")
    return lambda name: os.path.join(folder, name)
