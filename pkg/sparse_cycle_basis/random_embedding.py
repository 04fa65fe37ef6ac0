"""Seeded random embeddings for property tests and the stress command."""
from __future__ import annotations

import logging
from typing import Optional

import numpy as np

from .constants import DEFAULT_TRIES
from .embedding import Dart, EmbeddedGraph, euler_characteristic, trace_faces
from .exceptions import DomainError, NotFound
from .graph import Multigraph

logger = logging.getLogger(__name__)


def random_multigraph(n: int, m: int, rng: np.random.Generator) -> Multigraph:
    """Random connected graph: a random tree plus ``m - n + 1`` chords.

    Chords avoid parallel edges as long as ``m`` fits in a simple graph.
    """
    edges = [(int(rng.integers(v)), v) for v in range(1, n)]
    extra = m - len(edges)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if m <= len(pairs):
        tree = set(edges)
        free = [p for p in pairs if p not in tree]
        picked = rng.choice(len(free), size=extra, replace=False)
        edges += [free[i] for i in picked]
    else:
        picked = rng.integers(len(pairs), size=extra)
        edges += [pairs[i] for i in picked]
    return Multigraph(n, tuple(edges))


def random_rotation(
    g: Multigraph, rng: np.random.Generator, orientable: bool = False
) -> EmbeddedGraph:
    """Uniformly random rotations and, unless ``orientable``, signs."""
    rotation = []
    for v, incident in enumerate(g.incidence):
        darts = [
            Dart(e, 0 if g.edges[e][0] == v else 1) for e in incident
        ]
        rotation.append(tuple(darts[i] for i in rng.permutation(len(darts))))
    if orientable:
        signs = (1,) * g.edge_count
    else:
        signs = tuple(int(s) for s in rng.choice([-1, 1], size=g.edge_count))
    return EmbeddedGraph(g, tuple(rotation), signs)


def random_embedding(
    n: int,
    m: int,
    rng: Optional[np.random.Generator] = None,
    target_chi: int = 0,
    tries: int = DEFAULT_TRIES,
    orientable: bool = False,
    name: str = "",
) -> EmbeddedGraph:
    """First random embedding with Euler characteristic ``target_chi``.

    Parameters
    ----------
    n, m : int
        Number of vertices (at least 3) and edges (at least ``n``).
    rng : numpy.random.Generator, optional
        Source of randomness; a fresh unseeded generator if omitted.
    target_chi : int
    tries : int
        Number of graphs drawn before giving up.
    orientable : bool
        Draw only all-positive signatures.
    name : str
        Name given to the result.

    Raises
    ------
    DomainError
        ``n < 3`` or ``m < n``.
    NotFound
        No draw had the requested Euler characteristic.
    """
    if n < 3 or m < n:
        raise DomainError(f"needs n >= 3 and m >= n, received n={n}, m={m}")
    rng = rng if rng is not None else np.random.default_rng()
    for attempt in range(tries):
        e = random_rotation(random_multigraph(n, m, rng), rng, orientable)
        if euler_characteristic(e) == target_chi:
            logger.debug("hit chi=%d after %d draws", target_chi, attempt + 1)
            return EmbeddedGraph(
                e.graph,
                e.rotation,
                e.signs,
                name=name,
                expected_chi=target_chi,
            )
    raise NotFound(
        f"no embedding with chi={target_chi} in {tries} draws "
        f"(n={n}, m={m})"
    )


def grid_embedding(
    cols: int, rows: int, twisted: bool = False, name: str = ""
) -> EmbeddedGraph:
    """Square grid on the torus, or on the Klein bottle when ``twisted``.

    Vertex ``(c, r)`` has id ``r * cols + c``. Its edge to the right has id
    ``2 * v`` and its edge upwards ``2 * v + 1``. The top row wraps to the
    bottom row, mirrored left to right and with sign -1 when ``twisted``.
    Every face is a square, so the embedding has ``cols * rows`` faces.

    Raises
    ------
    DomainError
        ``cols`` or ``rows`` is below 3.
    """
    if cols < 3 or rows < 3:
        raise DomainError(
            f"grid needs at least 3 columns and rows, received {cols}x{rows}"
        )

    def vertex(c, r):
        return r * cols + c % cols

    def up(c, r):
        if r < rows - 1:
            return vertex(c, r + 1)
        return vertex(-c if twisted else c, 0)

    def down(c, r):
        if r > 0:
            return vertex(c, r - 1)
        return vertex(-c if twisted else c, rows - 1)

    edges, signs, rotation = [], [], []
    for r in range(rows):
        for c in range(cols):
            v = vertex(c, r)
            edges += [(v, vertex(c + 1, r)), (v, up(c, r))]
            signs += [1, -1 if twisted and r == rows - 1 else 1]
            rotation.append(
                (
                    Dart(2 * v, 0),
                    Dart(2 * v + 1, 0),
                    Dart(2 * vertex(c - 1, r), 1),
                    Dart(2 * down(c, r) + 1, 1),
                )
            )
    kind = "klein" if twisted else "torus"
    return EmbeddedGraph(
        Multigraph(cols * rows, tuple(edges)),
        tuple(rotation),
        tuple(signs),
        name=name or f"{kind}-grid-{cols}x{rows}",
        expected_chi=0,
    )


def random_grid_embedding(
    rng: np.random.Generator,
    sizes: tuple[int, int] = (3, 5),
    deletions: Optional[int] = None,
) -> EmbeddedGraph:
    """A random grid thinned out while staying on the same surface.

    The grid is toroidal or twisted at random. Edges with different faces
    on their two sides are then deleted one at a time, each deletion
    merging two faces, so the Euler characteristic stays 0. Finally every
    vertex is flipped with probability one half.

    Parameters
    ----------
    rng : numpy.random.Generator
    sizes : (int, int)
        Range of the column and row counts, inclusive.
    deletions : int, optional
        Number of edges to delete; random below the face count if omitted.
        Fewer are deleted once every edge has one face on both sides.
    """
    low, high = sizes
    cols, rows = (int(n) for n in rng.integers(low, high + 1, size=2))
    twisted = bool(rng.integers(2))
    e = grid_embedding(cols, rows, twisted)
    if deletions is None:
        deletions = int(rng.integers(cols * rows))
    for _ in range(deletions):
        removable = [
            edge
            for edge, (left, right) in enumerate(trace_faces(e).faces_of_edge)
            if left != right
        ]
        if not removable:
            break
        drop = removable[int(rng.integers(len(removable)))]
        e, _, _ = e.induced(
            edge for edge in range(e.graph.edge_count) if edge != drop
        )
    for v in np.flatnonzero(rng.integers(2, size=e.graph.vertex_count)):
        e = e.flip(int(v))
    logger.debug("grid %dx%d twisted=%s thinned to %r", cols, rows, twisted, e)
    return EmbeddedGraph(
        e.graph,
        e.rotation,
        e.signs,
        name=f"{'klein' if twisted else 'torus'}-grid-{cols}x{rows}",
        expected_chi=0,
    )


def random_chi_zero_embedding(
    rng: np.random.Generator,
    vertices: tuple[int, int] = (4, 12),
    tries: int = DEFAULT_TRIES,
    sizes: int = 10,
    grids: float = 0.5,
) -> EmbeddedGraph:
    """Random embedding on the torus or the Klein bottle.

    With probability ``grids`` the result is a thinned grid from
    :func:`random_grid_embedding`, which reaches many faces. Otherwise a
    random rotation is drawn on a sparse graph: the vertex count comes from
    ``vertices`` (inclusive) and the edge count from ``n + 1 .. n + 3``;
    up to ``sizes`` such pairs are tried.
    """
    if rng.random() < grids:
        return random_grid_embedding(rng)
    low, high = vertices
    for _ in range(sizes):
        n = int(rng.integers(low, high + 1))
        m = n + int(rng.integers(1, 4))
        try:
            return random_embedding(n, m, rng, target_chi=0, tries=tries)
        except NotFound:
            logger.debug("no chi=0 draw for n=%d, m=%d", n, m)
    raise NotFound(f"no chi=0 embedding in {sizes} graph sizes")
