import math

import numpy as np
import pytest

from sparse_cycle_basis.bounds import (
    choose_constants,
    f_eval,
    find_threshold,
    fit_constant,
    genus_upper_bound,
    recursion_bound,
    recursion_step,
    reduce_to_subgraph,
)
from sparse_cycle_basis.constants import DEFAULT_FIT_RANGE
from sparse_cycle_basis.cycle_space import span_of
from sparse_cycle_basis.embedding import euler_characteristic
from sparse_cycle_basis.exceptions import DomainError
from sparse_cycle_basis.graph import betti, fundamental_cycles, spanning_tree


def test_f_at_one_million():
    assert -1.395 <= f_eval(1e6) <= -1.385


def test_f_decreases_towards_limit():
    values = f_eval([1e3, 1e6, 1e9])
    assert np.all(np.diff(values) < 0)
    assert np.all(values > -1 / math.log(2))
    np.testing.assert_allclose(f_eval(1e300), -1 / math.log(2), atol=0.01)


def test_f_scalar_and_array():
    assert isinstance(f_eval(10), float)
    np.testing.assert_allclose(f_eval(np.array([10.0])), [f_eval(10)])


@pytest.mark.parametrize("g", [1, 0.5, -3])
def test_f_domain(g):
    with pytest.raises(DomainError):
        f_eval(g)


def test_genus_upper_bound():
    np.testing.assert_allclose(genus_upper_bound(2), 0.5)
    np.testing.assert_allclose(genus_upper_bound(8), 10 / 3)
    np.testing.assert_allclose(recursion_step(100), 93.459, atol=1e-3)
    with pytest.raises(DomainError):
        genus_upper_bound(1)


def test_recursion_base_case():
    trace = recursion_bound(1, g0=2)
    assert trace.genera == (1,)
    assert trace.final_bound == 4
    assert trace.steps == 0


def test_recursion_table():
    trace = recursion_bound(100, g0=10)
    assert trace.genera[:2] == (100, 94)
    assert trace.genera[-1] < 10
    assert list(trace.bounds) == sorted(trace.bounds, reverse=True)
    assert trace.bounds[-1] == 2 + 2 * trace.genera[-1]
    assert trace.final_bound == trace.bounds[-1] + 2 * trace.steps


def test_recursion_domain():
    with pytest.raises(DomainError):
        recursion_bound(0)
    with pytest.raises(DomainError):
        recursion_bound(10, g0=1)


def test_fit_constant():
    assert fit_constant(range(2, 11), g0=16) == pytest.approx(6.0)
    with pytest.raises(DomainError):
        fit_constant([1])


def test_ratio_plateaus():
    m = fit_constant(DEFAULT_FIT_RANGE)
    low = recursion_bound(10**6).ratio
    high = recursion_bound(10**9).ratio
    assert high <= low * 1.05
    assert recursion_bound(10**9).final_bound <= m * math.log2(10**9) ** 2


def test_steps_grow_like_log_squared():
    for p in (10, 20, 30, 40):
        trace = recursion_bound(2**p)
        assert trace.steps <= p**2


def test_find_threshold():
    assert find_threshold(1.0) == 5
    g0 = find_threshold(1.3)
    assert f_eval(g0) < -1.3
    assert f_eval(g0 - 1) >= -1.3
    with pytest.raises(DomainError):
        find_threshold(1.5)


def test_choose_constants():
    constants = choose_constants(1.0)
    assert constants.g0 == 5
    assert constants.m >= 2
    for g in range(2, constants.g0):
        assert 2 + 2 * g <= constants.m * math.log2(g) ** 2


def test_reduce_to_subgraph(embedded):
    chi = euler_characteristic(embedded)
    reduction = reduce_to_subgraph(embedded)
    assert betti(reduction.graph) == 2 - chi
    cycles = fundamental_cycles(spanning_tree(reduction.graph))
    basis = reduction.extend(cycles)
    assert len(basis) == betti(embedded.graph)
    assert span_of(basis, embedded.graph.edge_count).rank == len(basis)
