import numpy as np
import pytest

from sparse_cycle_basis.embedding import (
    euler_characteristic,
    is_orientable,
    trace_faces,
    validate,
)
from sparse_cycle_basis.exceptions import DomainError, NotFound
from sparse_cycle_basis.random_embedding import (
    grid_embedding,
    random_chi_zero_embedding,
    random_embedding,
    random_grid_embedding,
    random_multigraph,
    random_rotation,
)


def test_random_multigraph_is_connected(rng):
    for n, m in [(3, 3), (6, 10), (5, 14)]:
        g = random_multigraph(n, m, rng)
        assert (g.vertex_count, g.edge_count) == (n, m)
        assert g.is_connected()


def test_random_multigraph_is_simple_when_possible(rng):
    g = random_multigraph(6, 15, rng)
    assert len(set(g.edges)) == 15


def test_random_rotation_is_valid(rng):
    g = random_multigraph(7, 12, rng)
    assert validate(random_rotation(g, rng)) == []
    assert is_orientable(random_rotation(g, rng, orientable=True))


def test_random_embedding_hits_target():
    e = random_embedding(4, 8, np.random.default_rng(5), target_chi=0)
    assert euler_characteristic(e) == 0
    assert e.expected_chi == 0


def test_random_embedding_is_deterministic():
    first = random_embedding(6, 9, np.random.default_rng(11), name="r")
    second = random_embedding(6, 9, np.random.default_rng(11), name="r")
    assert first == second


def test_sphere_impossible_above_euler_bound(rng):
    # a simple graph on 6 vertices with 13 > 3n - 6 edges is not planar
    with pytest.raises(NotFound):
        random_embedding(6, 13, rng, target_chi=2, tries=50)


@pytest.mark.parametrize("n,m", [(2, 3), (5, 4)])
def test_random_embedding_domain(n, m):
    with pytest.raises(DomainError):
        random_embedding(n, m)


def test_random_chi_zero_embedding(rng):
    e = random_chi_zero_embedding(rng, vertices=(4, 6), grids=0)
    assert euler_characteristic(e) == 0
    assert 4 <= e.graph.vertex_count <= 6


@pytest.mark.parametrize(
    "cols,rows,twisted", [(3, 3, False), (5, 4, False), (4, 3, True)]
)
def test_grid_embedding(cols, rows, twisted):
    e = grid_embedding(cols, rows, twisted)
    faces = trace_faces(e)
    assert e.graph.edge_count == 2 * cols * rows
    assert len(faces) == cols * rows
    assert all(len(walk) == 4 for walk in faces)
    assert euler_characteristic(e) == 0
    assert is_orientable(e) is not twisted


@pytest.mark.parametrize("cols,rows", [(2, 3), (3, 1)])
def test_grid_embedding_domain(cols, rows):
    with pytest.raises(DomainError):
        grid_embedding(cols, rows)


@pytest.mark.parametrize("deletions", [0, 5, 100])
def test_random_grid_embedding(deletions):
    e = random_grid_embedding(
        np.random.default_rng(3), sizes=(4, 4), deletions=deletions
    )
    faces = trace_faces(e)
    assert euler_characteristic(e) == 0 == e.expected_chi
    assert e.graph.vertex_count == 16
    assert len(faces) == max(16 - deletions, 1)
    assert validate(e) == []


def test_random_grid_embedding_is_seeded():
    first, second = (
        random_grid_embedding(np.random.default_rng(11)) for _ in range(2)
    )
    assert first == second


def test_random_chi_zero_embedding_draws_grids():
    rng = np.random.default_rng(5)
    drawn = [random_chi_zero_embedding(rng, grids=1) for _ in range(5)]
    assert all("-grid-" in e.name for e in drawn)
    assert all(euler_characteristic(e) == 0 for e in drawn)
    assert all(e.graph.vertex_count >= 9 for e in drawn)
