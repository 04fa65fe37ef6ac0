import pytest

from sparse_cycle_basis.embedding import euler_characteristic
from sparse_cycle_basis.fixtures import (
    Fixture,
    complete_bipartite,
    from_neighbour_orders,
)


def test_names_round_trip():
    for name in Fixture.names():
        assert Fixture.from_name(name).name.lower() == name
    assert "k7_torus" in Fixture.names()


def test_unknown_name():
    with pytest.raises(KeyError):
        Fixture.from_name("k9_torus")


def test_fixtures_are_named(embedded):
    assert embedded.name in Fixture.names()
    assert euler_characteristic(embedded) == embedded.expected_chi


def test_fixtures_are_deterministic():
    assert Fixture.K7_TORUS() == Fixture.K7_TORUS()
    assert Fixture.CUBE_SPHERE() == Fixture.CUBE_SPHERE()


def test_complete_bipartite():
    g = complete_bipartite(2, 3)
    assert g.edges == ((0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4))


def test_neighbour_orders_signs():
    e = from_neighbour_orders(
        [[1, 2, 3], [0, 2, 3], [0, 1, 3], [0, 1, 2]], negative=[(2, 0)]
    )
    assert e.graph.edges[1] == (0, 2)
    assert e.signs == (1, -1, 1, 1, 1, 1)
