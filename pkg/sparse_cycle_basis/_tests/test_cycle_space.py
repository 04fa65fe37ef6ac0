import numpy as np
import pytest

from sparse_cycle_basis.cycle_space import (
    EdgeVector,
    GaussianBasis,
    add,
    same_span,
    span_of,
    vector_sum,
)
from sparse_cycle_basis.exceptions import UniverseMismatch


def test_from_edges_cancels_repeats():
    v = EdgeVector.from_edges(5, [0, 3, 3, 4])
    assert v.edges() == (0, 4)
    assert v.weight == 2


def test_from_edges_out_of_range():
    with pytest.raises(IndexError):
        EdgeVector.from_edges(3, [3])


def test_addition_is_symmetric_difference():
    a = EdgeVector.from_edges(6, [0, 1, 2])
    b = EdgeVector.from_edges(6, [2, 3])
    assert (a + b).edges() == (0, 1, 3)
    assert (a & b).edges() == (2,)
    assert (a | b).edges() == (0, 1, 2, 3)
    assert (a - b).edges() == (0, 1)
    assert not a + a
    assert add(a, b) == a + b == add(b, a)


def test_universe_mismatch():
    with pytest.raises(UniverseMismatch):
        EdgeVector.zeros(3) + EdgeVector.zeros(4)
    with pytest.raises(UniverseMismatch):
        vector_sum([EdgeVector.zeros(3)], 4)


def test_bits_are_read_only():
    v = EdgeVector.from_edges(4, [1])
    with pytest.raises(ValueError):
        v.bits[0] = True


def test_equality_and_hash():
    a = EdgeVector.from_edges(4, [1, 2])
    b = EdgeVector([False, True, True, False])
    assert a == b
    assert len({a, b}) == 1
    assert a != EdgeVector.from_edges(5, [1, 2])


def test_sort_key_orders_by_weight_first():
    vectors = [
        EdgeVector.from_edges(4, [0, 1, 2]),
        EdgeVector.from_edges(4, [3]),
        EdgeVector.from_edges(4, [0, 3]),
        EdgeVector.from_edges(4, [1, 2]),
    ]
    ordered = sorted(vectors, key=EdgeVector.sort_key)
    assert [v.edges() for v in ordered] == [(3,), (0, 3), (1, 2), (0, 1, 2)]


def test_gaussian_basis_rank_and_span():
    gb = GaussianBasis(4)
    a = EdgeVector.from_edges(4, [0, 1])
    b = EdgeVector.from_edges(4, [1, 2])
    assert gb.insert_if_independent(a)
    assert gb.insert_if_independent(b)
    assert not gb.insert_if_independent(a + b)
    assert gb.rank == 2
    assert gb.in_span(EdgeVector.from_edges(4, [0, 2]))
    assert not gb.in_span(EdgeVector.from_edges(4, [3]))
    assert [inserted for _, inserted in gb.log] == [True, True, False]


def test_gaussian_basis_rows_are_reduced():
    gb = span_of(
        [
            EdgeVector.from_edges(5, [0, 1, 2]),
            EdgeVector.from_edges(5, [0, 2, 4]),
            EdgeVector.from_edges(5, [1, 3]),
        ],
        5,
    )
    rows = np.array([row.bits for row in gb.rows], dtype=int)
    pivots = [int(np.flatnonzero(row)[0]) for row in rows]
    for i, p in enumerate(pivots):
        np.testing.assert_array_equal(
            rows[:, p], np.eye(len(pivots), dtype=int)[i]
        )


def test_copy_is_independent():
    gb = span_of([EdgeVector.from_edges(3, [0])], 3)
    other = gb.copy()
    other.insert_if_independent(EdgeVector.from_edges(3, [1]))
    assert gb.rank == 1
    assert other.rank == 2


def test_same_span(rng):
    universe = 8
    vectors = [
        EdgeVector(rng.integers(0, 2, universe).astype(bool))
        for _ in range(4)
    ]
    mixed = [vectors[0] + vectors[1], vectors[1], vectors[2], vectors[3]]
    assert same_span(vectors, mixed, universe)


def test_different_spans():
    a = EdgeVector.from_edges(3, [0, 1])
    b = EdgeVector.from_edges(3, [1, 2])
    assert not same_span([a], [a, b], 3)
    assert not same_span([a], [b], 3)
