"""Cycle bases built from face boundaries and fundamental cycles."""
from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .constants import Provenance
from .cycle_space import EdgeVector, GaussianBasis, span_of
from .embedding import EmbeddedGraph, euler_characteristic, trace_faces
from .exceptions import (
    RankDeficit,
    TheoremViolation,
    UniverseMismatch,
    WrongChi,
)
from .graph import (
    Multigraph,
    SpanningTree,
    betti,
    fundamental_cycle,
    spanning_tree,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BasisLabel:
    """Where a basis element came from.

    ``index`` is the face index for faces, the non-tree edge id for
    fundamental cycles and ``None`` for modified cycles.
    """

    provenance: Provenance
    index: Optional[int] = None

    def __str__(self) -> str:
        if self.provenance == Provenance.FACE:
            return f"face {self.index}"
        if self.provenance == Provenance.FUNDAMENTAL:
            return f"fundamental e{self.index}"
        return self.provenance.value

    @classmethod
    def parse(cls, text: str) -> BasisLabel:
        """Inverse of ``str``."""
        if text.startswith("face "):
            return cls(Provenance.FACE, int(text[5:]))
        if text.startswith("fundamental e"):
            return cls(Provenance.FUNDAMENTAL, int(text[13:]))
        return cls(Provenance(text))


def edge_loads(vectors: Sequence[EdgeVector], universe: int) -> np.ndarray:
    """Number of vectors containing each edge."""
    for v in vectors:
        if v.universe != universe:
            raise UniverseMismatch(
                f"universes differ ({universe} vs {v.universe})"
            )
    if not vectors:
        return np.zeros(universe, dtype=int)
    return np.sum([v.bits for v in vectors], axis=0, dtype=int)


def sparsity(vectors: Sequence[EdgeVector], universe: int) -> int:
    """Largest number of vectors sharing one edge."""
    loads = edge_loads(vectors, universe)
    return int(loads.max()) if loads.size else 0


class CycleBasis(Sequence[EdgeVector]):
    """Ordered cycle basis with a provenance label per element.

    Parameters
    ----------
    graph : Multigraph
        The graph whose cycle space is spanned.
    elements : sequence of EdgeVector
        Basis elements.
    labels : sequence of BasisLabel
        One label per element.
    """

    def __init__(self, graph: Multigraph, elements, labels) -> None:
        super().__init__()
        self.graph = graph
        self.elements = tuple(elements)
        self.labels = tuple(labels)
        if len(self.elements) != len(self.labels):
            raise ValueError(
                f"{len(self.elements)} elements but {len(self.labels)} labels"
            )

    def __len__(self) -> int:
        return len(self.elements)

    def __getitem__(self, key):
        return self.elements[key]

    @property
    def loads(self) -> np.ndarray:
        return edge_loads(self.elements, self.graph.edge_count)

    @property
    def sparsity(self) -> int:
        return sparsity(self.elements, self.graph.edge_count)

    def verify(self) -> tuple[bool, int]:
        return verify_basis(self.graph, self.elements)

    def __repr__(self) -> str:
        return f"<CycleBasis: {len(self)} elements, sparsity {self.sparsity}>"


def verify_basis(g: Multigraph, b: Sequence[EdgeVector]) -> tuple[bool, int]:
    """Whether ``b`` is a cycle basis of ``g``, and its sparsity.

    Raises
    ------
    UniverseMismatch
        An element is not a vector over the edges of ``g``.
    """
    k = sparsity(b, g.edge_count)
    if len(b) != betti(g):
        return False, k
    if not all(g.is_even(v) for v in b):
        return False, k
    return span_of(b, g.edge_count).rank == len(b), k


def face_basis(
    e: EmbeddedGraph, t: Optional[SpanningTree] = None
) -> tuple[tuple[int, ...], CycleBasis]:
    """All face boundaries but the last, completed by fundamental cycles.

    Parameters
    ----------
    e : EmbeddedGraph
        A connected cellular embedding.
    t : SpanningTree, optional
        Tree for the fundamental cycles; breadth-first from vertex 0 if
        omitted.

    Returns
    -------
    u_edges : tuple of int
        The ``2 - chi`` non-tree edges whose fundamental cycles were kept.
    basis : CycleBasis
    """
    g = e.graph
    target = betti(g)
    t = t or spanning_tree(g)
    faces = trace_faces(e)
    gb = GaussianBasis(g.edge_count)
    elements, labels = [], []
    for f, boundary in enumerate(faces.boundaries[:-1]):
        if not gb.insert_if_independent(boundary):
            raise RankDeficit(f"boundary of face {f} depends on earlier faces")
        elements.append(boundary)
        labels.append(BasisLabel(Provenance.FACE, f))

    u_edges = []
    for edge in t.non_tree_edges():
        if gb.rank == target:
            break
        cycle = fundamental_cycle(t, edge)
        if gb.insert_if_independent(cycle):
            elements.append(cycle)
            labels.append(BasisLabel(Provenance.FUNDAMENTAL, edge))
            u_edges.append(edge)
    if gb.rank != target:
        raise RankDeficit(f"reached rank {gb.rank} of {target}")
    logger.debug("face basis of %r uses non-tree edges %s", e, u_edges)
    return tuple(u_edges), CycleBasis(g, elements, labels)


def sparse_basis_general(e: EmbeddedGraph) -> CycleBasis:
    """Face basis of any embedding; sparsity at most ``4 - chi``."""
    chi = euler_characteristic(e)
    _, basis = face_basis(e)
    if basis.sparsity > 4 - chi:
        raise TheoremViolation(
            f"face basis has sparsity {basis.sparsity} > {4 - chi}",
            {"labels": [str(label) for label in basis.labels]},
        )
    return basis


def maclane_basis(e: EmbeddedGraph) -> CycleBasis:
    """All face boundaries but one of a spherical embedding."""
    chi = euler_characteristic(e)
    if chi != 2:
        raise WrongChi(f"needs a spherical embedding, chi is {chi}")
    _, basis = face_basis(e)
    if basis.sparsity > 2:
        raise TheoremViolation(
            f"planar face basis has sparsity {basis.sparsity}"
        )
    return basis


def three_basis_projective(e: EmbeddedGraph) -> CycleBasis:
    """Faces and one fundamental cycle of a projective-plane embedding."""
    chi = euler_characteristic(e)
    if chi != 1:
        raise WrongChi(f"needs Euler characteristic 1, received {chi}")
    _, basis = face_basis(e)
    if basis.sparsity > 3:
        raise TheoremViolation(
            f"projective face basis has sparsity {basis.sparsity}",
            {"labels": [str(label) for label in basis.labels]},
        )
    return basis
