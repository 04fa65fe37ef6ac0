"""Multigraphs, breadth-first spanning trees and fundamental cycles."""
from __future__ import annotations

import logging
from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass
from functools import cached_property

import networkx as nx
import numpy as np

from .cycle_space import EdgeVector
from .exceptions import DisconnectedGraph, EdgeInTree, InvalidGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Multigraph:
    """Undirected loopless multigraph with dense edge ids.

    Parameters
    ----------
    vertex_count : int
        Vertices are ``0 .. vertex_count - 1``.
    edges : tuple of (int, int)
        Endpoints of each edge; the position in the tuple is the edge id.
        Parallel edges are allowed, loops are not.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.vertex_count < 1:
            raise InvalidGraph(
                "a graph needs at least one vertex, "
                f"received {self.vertex_count}"
            )
        for e, (u, v) in enumerate(edges):
            for w in (u, v):
                if not 0 <= w < self.vertex_count:
                    raise InvalidGraph(
                        f"edge {e} has endpoint {w} outside "
                        f"0..{self.vertex_count - 1}"
                    )
            if u == v:
                raise InvalidGraph(f"edge {e} is a loop at vertex {u}")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Edge ids incident to each vertex, in increasing order."""
        incident = [[] for _ in range(self.vertex_count)]
        for e, (u, v) in enumerate(self.edges):
            incident[u].append(e)
            incident[v].append(e)
        return tuple(tuple(ids) for ids in incident)

    def endpoint(self, edge: int, end: int) -> int:
        return self.edges[edge][end]

    def other_end(self, edge: int, vertex: int) -> int:
        u, v = self.edges[edge]
        return v if vertex == u else u

    def is_connected(self) -> bool:
        return nx.is_connected(self.to_networkx())

    def degrees(self, vector: EdgeVector) -> np.ndarray:
        """Degree of every vertex in the spanning subgraph ``vector``."""
        ends = np.array(self.edges, dtype=int).reshape(-1, 2)
        selected = ends[vector.bits].ravel()
        return np.bincount(selected, minlength=self.vertex_count)

    def is_even(self, vector: EdgeVector) -> bool:
        """Whether ``vector`` lies in the cycle space (all degrees even)."""
        return not np.any(self.degrees(vector) % 2)

    def edge_vector(self, edges: Iterable[int]) -> EdgeVector:
        return EdgeVector.from_edges(self.edge_count, edges)

    def to_networkx(self, edges: Iterable[int] = None) -> nx.MultiGraph:
        """networkx view with the edge id as key.

        Only the given ``edges`` are added when provided; every vertex is
        kept either way.
        """
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(self.vertex_count))
        for e in range(self.edge_count) if edges is None else edges:
            u, v = self.edges[e]
            graph.add_edge(u, v, key=e)
        return graph

    def __repr__(self) -> str:
        return (
            f"<Multigraph: {self.vertex_count} vertices, "
            f"{self.edge_count} edges>"
        )


def _require_connected(g: Multigraph) -> None:
    if not g.is_connected():
        raise DisconnectedGraph(
            f"graph with {g.vertex_count} vertices is not connected"
        )


def betti(g: Multigraph) -> int:
    """Dimension of the cycle space, ``|E| - |V| + 1``."""
    _require_connected(g)
    return g.edge_count - g.vertex_count + 1


@dataclass(frozen=True)
class SpanningTree:
    """Spanning tree rooted at vertex 0.

    Parameters
    ----------
    graph : Multigraph
        The spanned graph.
    tree_edges : frozenset of int
        Edge ids of the tree.
    parent : tuple of int
        Parent vertex of each vertex, -1 at the root.
    parent_edge : tuple of int
        Edge to the parent, -1 at the root.
    depth : tuple of int
        Distance to the root along the tree.
    """

    graph: Multigraph
    tree_edges: frozenset
    parent: tuple[int, ...]
    parent_edge: tuple[int, ...]
    depth: tuple[int, ...]

    def __contains__(self, edge: int) -> bool:
        return edge in self.tree_edges

    def non_tree_edges(self) -> tuple[int, ...]:
        return tuple(
            e for e in range(self.graph.edge_count) if e not in self.tree_edges
        )

    def path_edges(self, u: int, v: int) -> list[int]:
        """Edge ids of the tree path between ``u`` and ``v``."""
        up, down = [], []
        while self.depth[u] > self.depth[v]:
            up.append(self.parent_edge[u])
            u = self.parent[u]
        while self.depth[v] > self.depth[u]:
            down.append(self.parent_edge[v])
            v = self.parent[v]
        while u != v:
            up.append(self.parent_edge[u])
            down.append(self.parent_edge[v])
            u, v = self.parent[u], self.parent[v]
        return up + down[::-1]


def spanning_tree(g: Multigraph) -> SpanningTree:
    """Breadth-first spanning tree from vertex 0.

    Edges are scanned in increasing id at every vertex, so the smallest
    edge id wins whenever several edges could discover the same vertex.
    """
    n = g.vertex_count
    parent = [-1] * n
    parent_edge = [-1] * n
    depth = [0] * n
    seen = [False] * n
    seen[0] = True
    tree = set()
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for e in g.incidence[u]:
            w = g.other_end(e, u)
            if not seen[w]:
                seen[w] = True
                parent[w], parent_edge[w], depth[w] = u, e, depth[u] + 1
                tree.add(e)
                queue.append(w)
    if not all(seen):
        raise DisconnectedGraph(
            f"{seen.count(False)} vertices unreachable from vertex 0"
        )
    return SpanningTree(
        graph=g,
        tree_edges=frozenset(tree),
        parent=tuple(parent),
        parent_edge=tuple(parent_edge),
        depth=tuple(depth),
    )


def fundamental_cycle(t: SpanningTree, e: int) -> EdgeVector:
    """``e`` together with the tree path between its endpoints."""
    if e in t.tree_edges:
        raise EdgeInTree(f"edge {e} belongs to the spanning tree")
    u, v = t.graph.edges[e]
    return t.graph.edge_vector([e, *t.path_edges(u, v)])


def fundamental_cycles(t: SpanningTree) -> list[EdgeVector]:
    return [fundamental_cycle(t, e) for e in t.non_tree_edges()]


def is_cycle(g: Multigraph, vector: EdgeVector) -> bool:
    """Whether ``vector`` is a single connected 2-regular subgraph."""
    if not vector:
        return False
    degrees = g.degrees(vector)
    if np.any((degrees != 0) & (degrees != 2)):
        return False
    edges = vector.edges()
    start = g.edges[edges[0]][0]
    seen, stack = {start}, [start]
    while stack:
        u = stack.pop()
        for e in g.incidence[u]:
            if e in vector:
                w = g.other_end(e, u)
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return len(seen) == int(np.count_nonzero(degrees))


def edge_subgraph(
    g: Multigraph, edges: Iterable[int]
) -> tuple[Multigraph, tuple[int, ...]]:
    """Spanning subgraph on the same vertices with only ``edges``.

    Returns the subgraph and, for each of its edge ids, the original id.
    """
    kept = tuple(sorted(set(edges)))
    sub = Multigraph(g.vertex_count, tuple(g.edges[e] for e in kept))
    return sub, kept
