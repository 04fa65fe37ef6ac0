"""Ground truth for small graphs: exhaustive basis number and planarity."""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

import networkx as nx
import numpy as np

from .bases import CycleBasis, maclane_basis, three_basis_projective
from .constants import MAX_BRUTE_FORCE_BETTI, MAX_PLANARITY_VERTICES
from .cycle_space import EdgeVector, GaussianBasis
from .embedding import Dart, EmbeddedGraph, euler_characteristic
from .exceptions import NotFound, TheoremViolation, TooLarge, WrongChi
from .graph import (
    Multigraph,
    _require_connected,
    betti,
    fundamental_cycles,
    spanning_tree,
)
from .three_basis import three_basis

logger = logging.getLogger(__name__)


def cycle_space_elements(g: Multigraph) -> list[EdgeVector]:
    """Every nonzero element of the cycle space, by (popcount, support)."""
    cycles = fundamental_cycles(spanning_tree(g))
    beta = len(cycles)
    if beta == 0:
        return []
    generators = np.array([c.bits for c in cycles], dtype=np.uint8)
    masks = (np.arange(1, 2**beta)[:, None] >> np.arange(beta)) & 1
    vectors = (masks @ generators) % 2
    elements = [EdgeVector(row.astype(bool)) for row in vectors]
    return sorted(elements, key=EdgeVector.sort_key)


def find_k_basis(g: Multigraph, k: int) -> Optional[list[EdgeVector]]:
    """First ``k``-sparse cycle basis in canonical order, or ``None``.

    Raises
    ------
    TooLarge
        The Betti number exceeds the brute-force guard.
    """
    beta = betti(g)
    if beta > MAX_BRUTE_FORCE_BETTI:
        raise TooLarge(
            f"betti number {beta} exceeds the brute-force limit "
            f"{MAX_BRUTE_FORCE_BETTI}"
        )
    if beta == 0:
        return []
    elements = cycle_space_elements(g)
    weights = [v.weight for v in elements]
    capacity = k * g.edge_count
    loads = np.zeros(g.edge_count, dtype=int)
    chosen: list[EdgeVector] = []

    def extend(start: int, gb: GaussianBasis) -> bool:
        remaining = beta - len(chosen)
        if remaining == 0:
            return True
        used = int(loads.sum())
        for i in range(start, len(elements) - remaining + 1):
            # weights are sorted, so the cheapest completion uses element i
            if used + remaining * weights[i] > capacity:
                return False
            v = elements[i]
            if np.any(loads[v.bits] >= k):
                continue
            trial = gb.copy()
            if not trial.insert_if_independent(v):
                continue
            loads[v.bits] += 1
            chosen.append(v)
            if extend(i + 1, trial):
                return True
            chosen.pop()
            loads[v.bits] -= 1
        return False

    if extend(0, GaussianBasis(g.edge_count)):
        return list(chosen)
    return None


def brute_force_basis_number(g: Multigraph, k_max: int = 4) -> int:
    """Smallest ``k <= k_max`` for which ``g`` has a ``k``-basis.

    Raises
    ------
    TooLarge
        The Betti number exceeds the brute-force guard.
    NotFound
        No ``k``-basis exists for any ``k <= k_max``.
    """
    if betti(g) == 0:
        return 0
    for k in range(1, k_max + 1):
        if find_k_basis(g, k) is not None:
            logger.debug("%r has a %d-basis", g, k)
            return k
    raise NotFound(f"no k-basis with k <= {k_max}")


@dataclass(frozen=True)
class PlanarityResult:
    """Planarity decision with its certificate.

    ``embedding`` is a spherical embedding when planar; otherwise
    ``kuratowski_edges`` is a subdivision of ``kuratowski_kind``
    ("K5" or "K3,3").
    """

    planar: bool
    embedding: Optional[EmbeddedGraph] = None
    kuratowski_edges: Optional[tuple[int, ...]] = None
    kuratowski_kind: Optional[str] = None


def planar_embedding(
    g: Multigraph, embedding: nx.PlanarEmbedding
) -> EmbeddedGraph:
    """Rotation system of ``g`` from a networkx embedding of its simple graph.

    Parallel edges are placed consecutively, in increasing id around the
    smaller endpoint and decreasing id around the larger one.
    """
    bundles = {}
    for e, (u, v) in enumerate(g.edges):
        bundles.setdefault(frozenset((u, v)), []).append(e)
    rotation = []
    for v in range(g.vertex_count):
        darts = []
        neighbours = embedding.neighbors_cw_order(v) if v in embedding else []
        for w in neighbours:
            bundle = bundles[frozenset((v, w))]
            for e in bundle if v < w else reversed(bundle):
                darts.append(Dart(e, 0 if g.edges[e][0] == v else 1))
        rotation.append(tuple(darts))
    return EmbeddedGraph(
        g, tuple(rotation), (1,) * g.edge_count, name="planar", expected_chi=2
    )


def verify_kuratowski(g: Multigraph, edges) -> Optional[str]:
    """"K5" or "K3,3" if ``edges`` form a subdivision of it, else ``None``."""
    h = nx.Graph()
    for e in edges:
        u, v = g.edges[e]
        if h.has_edge(u, v):
            return None
        h.add_edge(u, v)
    if h.number_of_nodes() == 0 or not nx.is_connected(h):
        return None
    degree = dict(h.degree())
    branch = sorted(v for v, d in degree.items() if d != 2)
    ends = Counter()
    for b in branch:
        for w in h[b]:
            previous, current = b, w
            while degree[current] == 2:
                previous, current = current, next(
                    n for n in h[current] if n != previous
                )
            if current == b:
                return None
            ends[frozenset((b, current))] += 1
    if any(count != 2 for count in ends.values()):
        return None
    reduced = nx.Graph(list(tuple(pair) for pair in ends))
    degrees = sorted(degree[b] for b in branch)
    if degrees == [4] * 5 and reduced.number_of_edges() == 10:
        return "K5"
    if (
        degrees == [3] * 6
        and reduced.number_of_edges() == 9
        and nx.is_bipartite(reduced)
        and sorted(map(len, nx.bipartite.sets(reduced))) == [3, 3]
    ):
        return "K3,3"
    return None


def is_planar(g: Multigraph) -> PlanarityResult:
    """Decide planarity and return a certificate either way.

    Raises
    ------
    TooLarge
        ``g`` has more vertices than the planarity guard.
    """
    n = g.vertex_count
    if n > MAX_PLANARITY_VERTICES:
        raise TooLarge(
            f"{n} vertices exceed the planarity limit {MAX_PLANARITY_VERTICES}"
        )
    _require_connected(g)
    simple = nx.Graph()
    simple.add_nodes_from(range(n))
    for e, (u, v) in enumerate(g.edges):
        if not simple.has_edge(u, v):
            simple.add_edge(u, v, edge=e)
    if n >= 3 and simple.number_of_edges() > 3 * n - 6:
        logger.debug("%r fails the Euler edge bound", g)
    planar, certificate = nx.check_planarity(simple, counterexample=True)
    if planar:
        embedding = planar_embedding(g, certificate)
        if euler_characteristic(embedding) != 2:
            raise TheoremViolation("planar certificate is not spherical")
        return PlanarityResult(True, embedding=embedding)
    edges = tuple(
        sorted(simple.edges[u, v]["edge"] for u, v in certificate.edges())
    )
    kind = verify_kuratowski(g, edges)
    if kind is None:
        raise TheoremViolation(
            "non-planarity certificate is not a Kuratowski subdivision",
            {"edges": list(edges)},
        )
    return PlanarityResult(False, kuratowski_edges=edges, kuratowski_kind=kind)


@dataclass(frozen=True)
class BasisNumber:
    """Basis number of an embedded graph with the evidence behind it.

    ``exact`` is false when only an upper bound is established.
    """

    value: int
    exact: bool
    proof: str
    planarity: PlanarityResult
    basis: Optional[CycleBasis] = field(default=None, repr=False)

    def __str__(self) -> str:
        return str(self.value) if self.exact else f"<={self.value}"


def basis_number_exact(e: EmbeddedGraph) -> BasisNumber:
    """Basis number of a graph embedded with Euler characteristic 0, 1 or 2.

    Planar graphs get 2 from the face basis of a spherical embedding (1 or
    0 when brute force finds better). Non-planar graphs get 3 from the
    Kuratowski certificate and the three-basis of the given embedding.
    """
    chi = euler_characteristic(e)
    if chi not in (0, 1, 2):
        raise WrongChi(f"needs Euler characteristic 0, 1 or 2, received {chi}")
    g = e.graph
    beta = betti(g)
    planarity = is_planar(g)
    if planarity.planar:
        basis = maclane_basis(planarity.embedding)
        if beta <= MAX_BRUTE_FORCE_BETTI:
            k = brute_force_basis_number(g, 2)
            return BasisNumber(
                k, True, "planar, exhaustive search", planarity, basis
            )
        return BasisNumber(2, False, "planar, face basis", planarity, basis)
    if chi == 0:
        basis, _ = three_basis(e)
    else:
        basis = three_basis_projective(e)
    proof = (
        f"{planarity.kuratowski_kind} subdivision, "
        f"{len(basis)}-element 3-basis"
    )
    return BasisNumber(3, True, proof, planarity, basis)
