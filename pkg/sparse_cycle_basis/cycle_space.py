"""GF(2) arithmetic on edge sets.

Elements of the cycle space are stored as dense boolean vectors indexed by
edge id. Addition is the symmetric difference of the underlying edge sets.
"""
from __future__ import annotations

import logging
from collections.abc import Iterable

import numpy as np

from .exceptions import UniverseMismatch

logger = logging.getLogger(__name__)


class EdgeVector:
    """Characteristic vector of an edge set over a fixed edge universe.

    Parameters
    ----------
    bits : array-like of bool
        One entry per edge id of the ambient graph.

    Notes
    -----
    Instances are immutable; the backing array is flagged read-only.
    """

    __slots__ = ("_bits",)

    def __init__(self, bits) -> None:
        bits = np.array(bits, dtype=bool)
        if bits.ndim != 1:
            raise ValueError(
                f"EdgeVector needs a 1-d array, received shape {bits.shape}"
            )
        bits.flags.writeable = False
        self._bits = bits

    @classmethod
    def zeros(cls, universe: int) -> EdgeVector:
        return cls(np.zeros(universe, dtype=bool))

    @classmethod
    def from_edges(cls, universe: int, edges: Iterable[int]) -> EdgeVector:
        """Build the vector whose support is ``edges``.

        Listing an edge twice cancels it, as addition over GF(2) would.
        """
        bits = np.zeros(universe, dtype=bool)
        for e in edges:
            if not 0 <= e < universe:
                raise IndexError(
                    f"Edge id ({e}) out of range ({universe} edges)"
                )
            bits[e] = not bits[e]
        return cls(bits)

    @property
    def bits(self) -> np.ndarray:
        return self._bits

    @property
    def universe(self) -> int:
        return self._bits.shape[0]

    @property
    def weight(self) -> int:
        """Number of edges in the support."""
        return int(np.count_nonzero(self._bits))

    def edges(self) -> tuple[int, ...]:
        return tuple(int(e) for e in np.flatnonzero(self._bits))

    def sort_key(self) -> tuple:
        """Order by popcount, then lexicographically by support."""
        return (self.weight, self.edges())

    def _check(self, other: EdgeVector) -> None:
        if not isinstance(other, EdgeVector):
            raise TypeError(f"expected EdgeVector, received {type(other)}")
        if other.universe != self.universe:
            raise UniverseMismatch(
                f"universes differ ({self.universe} vs {other.universe})"
            )

    def __add__(self, other: EdgeVector) -> EdgeVector:
        self._check(other)
        return EdgeVector(self._bits ^ other._bits)

    __xor__ = __add__

    def __and__(self, other: EdgeVector) -> EdgeVector:
        self._check(other)
        return EdgeVector(self._bits & other._bits)

    def __or__(self, other: EdgeVector) -> EdgeVector:
        self._check(other)
        return EdgeVector(self._bits | other._bits)

    def __sub__(self, other: EdgeVector) -> EdgeVector:
        self._check(other)
        return EdgeVector(self._bits & ~other._bits)

    def issubset(self, other: EdgeVector) -> bool:
        self._check(other)
        return not np.any(self._bits & ~other._bits)

    def __contains__(self, edge: int) -> bool:
        return bool(self._bits[edge])

    def __bool__(self) -> bool:
        return bool(self._bits.any())

    def __eq__(self, other) -> bool:
        if isinstance(other, EdgeVector):
            return self.universe == other.universe and np.array_equal(
                self._bits, other._bits
            )
        return False

    def __hash__(self) -> int:
        return hash((self.universe, np.packbits(self._bits).tobytes()))

    def __repr__(self) -> str:
        return (
            f"EdgeVector(universe={self.universe}, "
            f"edges={list(self.edges())})"
        )


def add(a: EdgeVector, b: EdgeVector) -> EdgeVector:
    """Symmetric difference of two edge vectors."""
    return a + b


def vector_sum(vectors: Iterable[EdgeVector], universe: int) -> EdgeVector:
    bits = np.zeros(universe, dtype=bool)
    for v in vectors:
        if v.universe != universe:
            raise UniverseMismatch(
                f"universes differ ({universe} vs {v.universe})"
            )
        bits ^= v.bits
    return EdgeVector(bits)


class GaussianBasis:
    """Incrementally maintained reduced row basis over GF(2).

    Every row is keyed by its pivot, the smallest edge id in its support,
    and no other row has that edge set.

    Parameters
    ----------
    universe : int
        Number of edges of the ambient graph.
    """

    def __init__(self, universe: int) -> None:
        self.universe = universe
        self._rows: dict[int, np.ndarray] = {}
        # (vector, inserted) in call order
        self._log: list[tuple[EdgeVector, bool]] = []

    def _check(self, v: EdgeVector) -> None:
        if v.universe != self.universe:
            raise UniverseMismatch(
                f"basis universe is {self.universe}, vector universe is "
                f"{v.universe}"
            )

    def reduce(self, v: EdgeVector) -> EdgeVector:
        """Remainder of ``v`` after elimination against the current rows."""
        self._check(v)
        r = v.bits.copy()
        for pivot, row in self._rows.items():
            if r[pivot]:
                r ^= row
        return EdgeVector(r)

    def insert_if_independent(self, v: EdgeVector) -> bool:
        r = self.reduce(v).bits.copy()
        if not r.any():
            self._log.append((v, False))
            return False
        pivot = int(np.flatnonzero(r)[0])
        for row in self._rows.values():
            if row[pivot]:
                row ^= r
        self._rows[pivot] = r
        self._log.append((v, True))
        return True

    def in_span(self, v: EdgeVector) -> bool:
        return not self.reduce(v)

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple[EdgeVector, ...]:
        return tuple(EdgeVector(self._rows[p]) for p in sorted(self._rows))

    @property
    def log(self) -> tuple[tuple[EdgeVector, bool], ...]:
        return tuple(self._log)

    def copy(self) -> GaussianBasis:
        other = GaussianBasis(self.universe)
        other._rows = {p: row.copy() for p, row in self._rows.items()}
        other._log = list(self._log)
        return other

    def __repr__(self) -> str:
        return f"<GaussianBasis: rank {self.rank} over {self.universe} edges>"


def insert_if_independent(gb: GaussianBasis, v: EdgeVector) -> bool:
    return gb.insert_if_independent(v)


def in_span(gb: GaussianBasis, v: EdgeVector) -> bool:
    return gb.in_span(v)


def rank(gb: GaussianBasis) -> int:
    return gb.rank


def span_of(vectors: Iterable[EdgeVector], universe: int) -> GaussianBasis:
    gb = GaussianBasis(universe)
    for v in vectors:
        gb.insert_if_independent(v)
    return gb


def same_span(
    first: Iterable[EdgeVector], second: Iterable[EdgeVector], universe: int
) -> bool:
    """Whether two families of vectors generate the same subspace."""
    a = span_of(first, universe)
    b = span_of(second, universe)
    if a.rank != b.rank:
        return False
    return all(a.in_span(row) for row in b.rows)
