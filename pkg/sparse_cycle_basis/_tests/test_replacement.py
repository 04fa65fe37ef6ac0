import numpy as np
import pytest

from sparse_cycle_basis.constants import CaseTag
from sparse_cycle_basis.cycle_space import EdgeVector, same_span, vector_sum
from sparse_cycle_basis.exceptions import PreconditionFailed
from sparse_cycle_basis.replacement import (
    ReplacementWitness,
    apply_replacement,
    check_replacement_preconditions,
    replacement_violations,
)

UNIVERSE = 12


def vec(*edges):
    return EdgeVector.from_edges(UNIVERSE, edges)


def random_vector(rng, p=0.4):
    return EdgeVector(rng.random(UNIVERSE) < p)


def test_apply_replacement():
    x, y = vec(0, 1, 2), vec(2, 3, 4)
    h, k = vec(2, 5), vec(4, 6)
    x2, y2 = apply_replacement(x, y, h, k)
    assert x2 == vec(0, 1, 5)
    assert y2 == vec(2, 3, 6)


def test_violations_are_named():
    x, y = vec(0, 1), vec(1, 2)
    zero = EdgeVector.zeros(UNIVERSE)
    assert replacement_violations(x, y, zero, zero, zero) == [
        "x & y <= h | k | f0"
    ]
    assert check_replacement_preconditions(x, y, zero, zero, vec(1))
    with pytest.raises(PreconditionFailed):
        apply_replacement(x, y, zero, zero, zero)


def test_witness_as_dict():
    zero = EdgeVector.zeros(UNIVERSE)
    witness = ReplacementWitness(
        vec(0, 1), vec(2, 3), zero, zero, 4, CaseTag.DISJOINT
    )
    assert witness.as_dict() == {
        "case": "disjoint",
        "f0": 4,
        "x": [0, 1],
        "y": [2, 3],
        "h": [],
        "k": [],
        "q_path": None,
        "v0": None,
        "side": None,
        "i_x": [],
        "i_y": [],
    }


@pytest.mark.slow
def test_replacement_property(rng):
    accepted = 0
    draws = 0
    while accepted < 10_000:
        draws += 1
        assert draws < 200_000
        faces = [random_vector(rng) for _ in range(4)]
        x, y = random_vector(rng), random_vector(rng)
        mask_h = rng.random(len(faces)) < 0.5
        mask_k = rng.random(len(faces)) < 0.5
        h = vector_sum([f for f, m in zip(faces, mask_h) if m], UNIVERSE)
        k = vector_sum([f for f, m in zip(faces, mask_k) if m], UNIVERSE)
        if rng.random() < 0.5:
            f0 = random_vector(rng, 0.7)
        else:
            required = (x & y) | (x & k) | (h & y) | (h & k)
            f0 = required | random_vector(rng, 0.2)
        if not check_replacement_preconditions(x, y, h, k, f0):
            with pytest.raises(PreconditionFailed):
                apply_replacement(x, y, h, k, f0)
            continue
        accepted += 1
        x2, y2 = apply_replacement(x, y, h, k, f0)
        assert (x2 & y2).issubset(f0)
        assert same_span([*faces, x, y], [*faces, x2, y2], UNIVERSE)


def test_overlap_only_inside_dropped_face():
    # x and y share edge 1; h moves x off it except through f0
    x, y = vec(0, 1, 2), vec(1, 3, 4)
    f0 = vec(1, 5, 6)
    h = f0
    k = EdgeVector.zeros(UNIVERSE)
    x2, y2 = apply_replacement(x, y, h, k, f0)
    assert not (x2 & y2)
    np.testing.assert_array_equal(x2.edges(), [0, 2, 5, 6])
