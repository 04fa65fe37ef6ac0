"""Named embedded graphs used by the tests and the ``fixture`` command.

Most fixtures are given by the cyclic order of neighbours around every
vertex of a simple graph. Edge ids follow the sorted list of pairs
``(u, v)`` with ``u < v``.
"""
from dataclasses import replace
from enum import Enum
from functools import partial

import networkx as nx

from .embedding import Dart, EmbeddedGraph
from .graph import Multigraph
from .oracle import planar_embedding
from .utils import pairwise


def complete_graph(n: int) -> Multigraph:
    return Multigraph(
        n, tuple((u, v) for u in range(n) for v in range(u + 1, n))
    )


def complete_bipartite(m: int, n: int) -> Multigraph:
    """Parts ``0..m-1`` and ``m..m+n-1``."""
    return Multigraph(
        m + n, tuple((u, m + v) for u in range(m) for v in range(n))
    )


def from_networkx(graph: nx.Graph) -> Multigraph:
    """Multigraph of a simple networkx graph, nodes relabelled in order."""
    graph = nx.convert_node_labels_to_integers(graph, ordering="sorted")
    edges = sorted(tuple(sorted(edge)) for edge in graph.edges())
    return Multigraph(graph.number_of_nodes(), tuple(edges))


def from_neighbour_orders(
    orders, negative=(), name: str = "", chi=None
) -> EmbeddedGraph:
    """Embedding of a simple graph from its neighbour rotations.

    Parameters
    ----------
    orders : sequence of sequence of int
        Cyclic order of the neighbours of every vertex.
    negative : iterable of (int, int)
        Vertex pairs whose edge gets sign -1.
    name : str
    chi : int, optional
        Expected Euler characteristic.
    """
    pairs = sorted(
        {(min(v, w), max(v, w)) for v, ws in enumerate(orders) for w in ws}
    )
    edge_id = {pair: e for e, pair in enumerate(pairs)}
    rotation = tuple(
        tuple(
            Dart(edge_id[min(v, w), max(v, w)], 0 if v < w else 1)
            for w in ws
        )
        for v, ws in enumerate(orders)
    )
    twisted = {(min(u, v), max(u, v)) for u, v in negative}
    signs = tuple(-1 if pair in twisted else 1 for pair in pairs)
    return EmbeddedGraph(
        Multigraph(len(orders), tuple(pairs)),
        rotation,
        signs,
        name=name,
        expected_chi=chi,
    )


def with_pendant_path(
    e: EmbeddedGraph, vertex: int, position: int = 0, length: int = 1
) -> EmbeddedGraph:
    """``e`` with a path of ``length`` new edges hanging from ``vertex``.

    The new dart at ``vertex`` is inserted at ``position`` in its rotation.
    The path sits inside one face, which then walks each new edge twice;
    the surface is unchanged.
    """
    g = e.graph
    n, m = g.vertex_count, g.edge_count
    ends = (vertex, *range(n, n + length))
    rotation = list(e.rotation)
    darts = list(rotation[vertex])
    darts.insert(position, Dart(m, 0))
    rotation[vertex] = tuple(darts)
    for i in range(length):
        tail = (Dart(m + i + 1, 0),) if i < length - 1 else ()
        rotation.append((Dart(m + i, 1), *tail))
    return EmbeddedGraph(
        Multigraph(n + length, g.edges + tuple(pairwise(ends))),
        tuple(rotation),
        e.signs + (1,) * length,
        name=f"{e.name}+pendant{length}",
        expected_chi=e.expected_chi,
    )


def _circulant(n: int, offsets, name: str, chi: int) -> EmbeddedGraph:
    orders = [[(i + k) % n for k in offsets] for i in range(n)]
    return from_neighbour_orders(orders, name=name, chi=chi)


def _spherical(graph: nx.Graph, name: str) -> EmbeddedGraph:
    g = from_networkx(graph)
    simple = nx.Graph(g.edges)
    simple.add_nodes_from(range(g.vertex_count))
    _, embedding = nx.check_planarity(simple)
    e = planar_embedding(g, embedding)
    return replace(e, name=name)


def triangle() -> EmbeddedGraph:
    return from_neighbour_orders(
        [[1, 2], [0, 2], [0, 1]], name="triangle", chi=2
    )


def digon() -> EmbeddedGraph:
    """Two vertices joined by two parallel edges, on the sphere."""
    return EmbeddedGraph(
        Multigraph(2, ((0, 1), (0, 1))),
        ((Dart(0, 0), Dart(1, 0)), (Dart(0, 1), Dart(1, 1))),
        (1, 1),
        name="digon",
        expected_chi=2,
    )


def k4_sphere() -> EmbeddedGraph:
    return _spherical(nx.complete_graph(4), "k4_sphere")


def cube_sphere() -> EmbeddedGraph:
    return _spherical(nx.hypercube_graph(3), "cube_sphere")


def k5_torus() -> EmbeddedGraph:
    """K5 on the torus, five quadrilateral faces."""
    return _circulant(5, (1, 2, 4, 3), "k5_torus", 0)


def k5_double_torus() -> EmbeddedGraph:
    """K5 with the cyclic rotation; three faces on the double torus."""
    return _circulant(5, (1, 2, 3, 4), "k5_double_torus", -2)


def k7_torus() -> EmbeddedGraph:
    """The toroidal triangulation by K7, 14 triangles."""
    return _circulant(7, (1, 3, 2, 6, 4, 5), "k7_torus", 0)


def k33_torus() -> EmbeddedGraph:
    """K3,3 on the torus, three hexagons."""
    orders = [[3, 4, 5]] * 3 + [[0, 1, 2]] * 3
    return from_neighbour_orders(orders, name="k33_torus", chi=0)


_K6_ORDERS = [
    [1, 2, 3, 4, 5],
    [0, 2, 4, 3, 5],
    [0, 1, 4, 5, 3],
    [0, 2, 5, 1, 4],
    [0, 3, 1, 2, 5],
    [0, 4, 2, 3, 1],
]
_K6_TWISTED = [(0, 1), (1, 2), (1, 5), (2, 4), (2, 5), (3, 5)]


def k6_projective() -> EmbeddedGraph:
    """The hemi-icosahedron: K6 triangulating the projective plane."""
    return from_neighbour_orders(
        _K6_ORDERS, _K6_TWISTED, name="k6_projective", chi=1
    )


_K5_ORDERS = [
    [1, 3, 2, 4],
    [0, 3, 4, 2],
    [1, 4, 0, 3],
    [2, 0, 1, 4],
    [3, 1, 2, 0],
]
_K5_TWISTED = [(0, 1), (0, 4), (1, 3), (1, 4), (2, 4)]


def k5_projective() -> EmbeddedGraph:
    """K6 projective with one vertex removed; six faces."""
    return from_neighbour_orders(
        _K5_ORDERS, _K5_TWISTED, name="k5_projective", chi=1
    )


def k5_klein() -> EmbeddedGraph:
    """The projective K5 with edge 02 twisted: Klein bottle, five faces."""
    return from_neighbour_orders(
        _K5_ORDERS, [*_K5_TWISTED, (0, 2)], name="k5_klein", chi=0
    )


class Fixture(Enum):
    """Fixture: a named embedded graph.

        * TRIANGLE, DIGON, K4_SPHERE, CUBE_SPHERE: spherical.
        * K5_TORUS, K33_TORUS, K7_TORUS: torus.
        * K5_KLEIN: Klein bottle.
        * K5_PROJECTIVE, K6_PROJECTIVE: projective plane.
        * K5_DOUBLE_TORUS: orientable genus 2.
    """

    TRIANGLE = partial(triangle)
    DIGON = partial(digon)
    K4_SPHERE = partial(k4_sphere)
    CUBE_SPHERE = partial(cube_sphere)
    K5_TORUS = partial(k5_torus)
    K33_TORUS = partial(k33_torus)
    K7_TORUS = partial(k7_torus)
    K5_KLEIN = partial(k5_klein)
    K5_PROJECTIVE = partial(k5_projective)
    K6_PROJECTIVE = partial(k6_projective)
    K5_DOUBLE_TORUS = partial(k5_double_torus)

    def __call__(self) -> EmbeddedGraph:
        return self.value()

    @classmethod
    def names(cls) -> list[str]:
        return [member.name.lower() for member in cls]

    @classmethod
    def from_name(cls, name: str) -> "Fixture":
        return cls[name.upper()]
