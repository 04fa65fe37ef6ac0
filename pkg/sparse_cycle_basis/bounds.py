"""Numerics of the logarithmic bound for graphs of large genus.

A cellular embedding of genus ``g`` reduces to a subgraph of Betti number
``2g``; that subgraph embeds with genus at most
``g - g / (2 log2(2g))``, and every reduction costs 2 in the basis number.
Iterating until the genus falls below a threshold ``g0`` gives a bound of
order ``log2(g) ** 2``.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np
from scipy import optimize

from .bases import CycleBasis, face_basis
from .constants import DEFAULT_G0, RECURSION_STEP_LIMIT, Provenance
from .cycle_space import EdgeVector, span_of
from .embedding import EmbeddedGraph, euler_characteristic
from .exceptions import DomainError, NonTermination, TheoremViolation
from .graph import (
    Multigraph,
    betti,
    edge_subgraph,
    fundamental_cycles,
    spanning_tree,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SubgraphReduction:
    """Spanning tree plus the extra edges of the face basis.

    Parameters
    ----------
    source : EmbeddedGraph
        The reduced embedding.
    graph : Multigraph
        The subgraph, on the same vertices.
    edge_map : tuple of int
        Original edge id of every subgraph edge.
    faces : CycleBasis
        The face boundaries of the face basis, all but the last face.
    """

    source: EmbeddedGraph
    graph: Multigraph
    edge_map: tuple[int, ...]
    faces: CycleBasis

    def lift(self, vector: EdgeVector) -> EdgeVector:
        """A subgraph edge set in the ids of the original graph."""
        return EdgeVector.from_edges(
            self.source.graph.edge_count,
            (self.edge_map[e] for e in vector.edges()),
        )

    def extend(self, subgraph_basis) -> list[EdgeVector]:
        """Cycle basis of the original graph from one of the subgraph.

        Adding the face boundaries raises the sparsity by at most 2.
        """
        return list(self.faces) + [self.lift(v) for v in subgraph_basis]


def reduce_to_subgraph(e: EmbeddedGraph) -> SubgraphReduction:
    """Subgraph whose cycles complete the face boundaries to a basis.

    Raises
    ------
    TheoremViolation
        The subgraph has the wrong Betti number or its cycles and the faces
        do not span the cycle space.
    """
    g = e.graph
    tree = spanning_tree(g)
    u_edges, basis = face_basis(e, tree)
    chi = euler_characteristic(e)
    h, edge_map = edge_subgraph(g, set(tree.tree_edges) | set(u_edges))
    if betti(h) != 2 - chi:
        raise TheoremViolation(
            f"subgraph has betti number {betti(h)}, expected {2 - chi}"
        )
    kept = [
        i
        for i, label in enumerate(basis.labels)
        if label.provenance == Provenance.FACE
    ]
    faces = CycleBasis(
        g, [basis[i] for i in kept], [basis.labels[i] for i in kept]
    )
    reduction = SubgraphReduction(e, h, edge_map, faces)
    cycles = [
        reduction.lift(c) for c in fundamental_cycles(spanning_tree(h))
    ]
    if span_of(list(faces) + cycles, g.edge_count).rank != betti(g):
        raise TheoremViolation("subgraph cycles and faces do not span")
    logger.debug("reduced %r to a subgraph with betti %d", e, 2 - chi)
    return reduction


def genus_upper_bound(beta: int) -> float:
    """Largest orientable genus of a graph with Betti number ``beta``,
    bounded as ``beta/2 - beta/(4 log2 beta)``."""
    if beta < 2:
        raise DomainError(f"needs a Betti number of at least 2, got {beta}")
    return beta / 2 - beta / (4 * math.log2(beta))


def recursion_step(g: float) -> float:
    """Genus bound after one reduction, ``g - g / (2 log2(2g))``."""
    return genus_upper_bound(2 * g)


def f_eval(g):
    """Change of ``log2(g) ** 2`` over one reduction step.

    ``f(g) = 2 log2(g) log2(1 - a) + log2(1 - a) ** 2`` with
    ``a = 1 / (2 log2(2g))``; tends to ``-1 / ln 2``.

    Parameters
    ----------
    g : float or array-like
        Genus values, all greater than 1.
    """
    values = np.asarray(g, dtype=float)
    if np.any(values <= 1):
        raise DomainError(f"f is defined for g > 1, received {g}")
    shrink = np.log2(1 - 1 / (2 * np.log2(2 * values)))
    result = 2 * np.log2(values) * shrink + shrink**2
    return float(result) if result.ndim == 0 else result


@dataclass(frozen=True)
class RecursionTrace:
    """Iterates of the genus recursion and the bound at each of them.

    Parameters
    ----------
    genera : tuple of int
        ``g_0 = g`` and the rounded-up iterates, while at least ``g0``.
    bounds : tuple of int
        Basis number bound at each iterate.
    g0 : int
        Threshold below which ``2 + 2g`` is used.
    m : float, optional
        Fitted constant, when one was supplied.
    """

    genera: tuple[int, ...]
    bounds: tuple[int, ...]
    g0: int
    m: Optional[float] = None

    @property
    def steps(self) -> int:
        return len(self.genera) - 1

    @property
    def final_bound(self) -> int:
        return self.bounds[0]

    @property
    def ratio(self) -> float:
        """``final_bound / log2(g) ** 2``."""
        return self.final_bound / math.log2(self.genera[0]) ** 2


def recursion_bound(
    g: int, g0: int = DEFAULT_G0, m: Optional[float] = None
) -> RecursionTrace:
    """Iterate the reduction from genus ``g`` down to below ``g0``.

    Each iterate is rounded up. Iteration also stops when rounding leaves
    the genus unchanged; the base bound ``2 + 2g`` holds there as well.

    Raises
    ------
    DomainError
        ``g < 1`` or ``g0 < 2``.
    NonTermination
        More than ``RECURSION_STEP_LIMIT`` steps.
    """
    if g < 1:
        raise DomainError(f"genus must be at least 1, received {g}")
    if g0 < 2:
        raise DomainError(f"threshold must be at least 2, received {g0}")
    genera = [int(g)]
    while genera[-1] >= g0:
        if len(genera) > RECURSION_STEP_LIMIT:
            raise NonTermination(
                f"recursion from genus {g} exceeded "
                f"{RECURSION_STEP_LIMIT} steps"
            )
        following = math.ceil(recursion_step(genera[-1]))
        if following >= genera[-1]:
            logger.debug("recursion stalls at genus %d", genera[-1])
            break
        genera.append(following)
    steps = len(genera) - 1
    base = 2 + 2 * genera[-1]
    bounds = tuple(base + 2 * (steps - i) for i in range(steps + 1))
    return RecursionTrace(tuple(genera), bounds, g0, m)


def fit_constant(g_range, g0: int = DEFAULT_G0) -> float:
    """Smallest ``M`` with ``final_bound <= M log2(g) ** 2`` on ``g_range``.

    Genera below 2 are skipped since ``log2(g) ** 2`` vanishes at 1.
    """
    genera = [int(g) for g in g_range if g >= 2]
    if not genera:
        raise DomainError("fit range holds no genus of at least 2")
    ratios = [recursion_bound(g, g0).ratio for g in genera]
    return float(np.max(ratios))


def find_threshold(eps: float) -> int:
    """Smallest integer ``g0 >= 2`` with ``f(g) < -eps`` for all ``g >= g0``.

    The crossing of ``f`` with ``-eps`` is located with ``brentq`` and then
    confirmed on the integers around it.

    Raises
    ------
    DomainError
        ``eps`` outside ``(0, 1 / ln 2)``.
    """
    if not 0 < eps < 1 / math.log(2):
        raise DomainError(f"eps must lie in (0, 1/ln 2), received {eps}")

    def shifted(g):
        return f_eval(g) + eps

    lo, hi = 1.0 + 1e-9, 2.0
    while shifted(hi) >= 0:
        lo, hi = hi, 2 * hi
        if hi > 1e300:
            raise NonTermination(f"no crossing found for eps={eps}")
    root = optimize.brentq(shifted, lo, hi)
    g0 = max(2, math.floor(root))
    while f_eval(g0) >= -eps:
        g0 += 1
    while g0 > 2 and f_eval(g0 - 1) < -eps:
        g0 -= 1
    logger.debug("f crosses -%s at %.6g, threshold %d", eps, root, g0)
    return g0


class Constants(NamedTuple):
    g0: int
    m: float
    eps: float


def choose_constants(eps: float = 1.0) -> Constants:
    """Threshold and constant for which ``bn <= M log2(g) ** 2`` inducts.

    ``M`` covers the base cases ``2 + 2g`` for ``2 <= g < g0`` and satisfies
    ``M * eps >= 2``, so one reduction step never breaks the bound.
    """
    g0 = find_threshold(eps)
    base = [(2 + 2 * g) / math.log2(g) ** 2 for g in range(2, g0)]
    m = max([2 / eps, *base])
    return Constants(g0, m, eps)
