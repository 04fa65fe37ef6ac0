from enum import Enum
from functools import partial
from typing import NamedTuple, Optional

from .bases import (
    CycleBasis,
    maclane_basis,
    sparse_basis_general,
    three_basis_projective,
)
from .embedding import EmbeddedGraph, euler_characteristic
from .exceptions import WrongChi
from .replacement import ReplacementWitness
from .three_basis import three_basis


class BasisResult(NamedTuple):
    basis: CycleBasis
    witness: Optional[ReplacementWitness] = None


def _maclane(e: EmbeddedGraph) -> BasisResult:
    return BasisResult(maclane_basis(e))


def _face(e: EmbeddedGraph) -> BasisResult:
    return BasisResult(sparse_basis_general(e))


def _three(e: EmbeddedGraph) -> BasisResult:
    chi = euler_characteristic(e)
    if chi == 1:
        return BasisResult(three_basis_projective(e))
    if chi != 0:
        raise WrongChi(f"three-basis needs chi 0 or 1, received {chi}")
    return BasisResult(*three_basis(e))


def _auto(e: EmbeddedGraph) -> BasisResult:
    chi = euler_characteristic(e)
    if chi == 2:
        return _maclane(e)
    if chi in (0, 1):
        return _three(e)
    return _face(e)


class Method(Enum):
    """Method: construction used for a cycle basis.

    Selects a basis construction
        * AUTO: route by Euler characteristic (2: MACLANE, 1 and 0: THREE,
          otherwise FACE).
        * MACLANE: all faces but one of a spherical embedding.
        * FACE: faces plus ``2 - chi`` fundamental cycles.
        * THREE: sparsity 3 for Euler characteristic 0 or 1.

    """

    AUTO = partial(_auto)
    MACLANE = partial(_maclane)
    FACE = partial(_face)
    THREE = partial(_three)

    def __call__(self, *args):
        return self.value(*args)
