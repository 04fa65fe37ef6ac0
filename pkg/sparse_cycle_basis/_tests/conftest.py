"""Test configuration for sharing fixtures across multiple files with automatic
discovery at test time.
https://docs.pytest.org/en/stable/fixture.html
"""
import numpy as np
import pytest

from sparse_cycle_basis.fixtures import Fixture
from sparse_cycle_basis.random_embedding import grid_embedding

TOROIDAL = (
    Fixture.K5_TORUS,
    Fixture.K33_TORUS,
    Fixture.K7_TORUS,
    Fixture.K5_KLEIN,
)
PROJECTIVE = (Fixture.K5_PROJECTIVE, Fixture.K6_PROJECTIVE)
SPHERICAL = (
    Fixture.TRIANGLE,
    Fixture.DIGON,
    Fixture.K4_SPHERE,
    Fixture.CUBE_SPHERE,
)


def _name(fixture):
    return fixture.name.lower()


@pytest.fixture
def rng():
    return np.random.default_rng(0)


@pytest.fixture(params=list(Fixture), ids=_name)
def embedded(request):
    return request.param()


@pytest.fixture(params=TOROIDAL, ids=_name)
def toroidal(request):
    return request.param()


@pytest.fixture(params=PROJECTIVE, ids=_name)
def projective(request):
    return request.param()


@pytest.fixture(params=SPHERICAL, ids=_name)
def spherical(request):
    return request.param()


@pytest.fixture
def grid_torus():
    """6 x 6 square grid on the torus."""
    return grid_embedding(6, 6)
