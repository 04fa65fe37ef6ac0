"""Signed rotation systems.

A dart is one end of an edge. The rotation at a vertex is the cyclic order
of the darts at that vertex; together with a sign per edge it describes a
cellular embedding on an orientable or non-orientable surface.
"""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import NamedTuple, Optional

from ..exceptions import ChiMismatch, InvalidEmbedding
from ..graph import Multigraph, spanning_tree

logger = logging.getLogger(__name__)


class Dart(NamedTuple):
    """End ``end`` of edge ``edge``; end 0 sits at the edge's first vertex."""

    edge: int
    end: int

    @property
    def twin(self) -> Dart:
        return Dart(self.edge, 1 - self.end)

    @property
    def index(self) -> int:
        return 2 * self.edge + self.end


# (dart, orientation) with orientation +1 / -1
State = tuple[Dart, int]


@dataclass(frozen=True)
class EmbeddedGraph:
    """Multigraph with a rotation system and an edge signature.

    Parameters
    ----------
    graph : Multigraph
        The underlying graph.
    rotation : tuple of tuple of Dart
        Cyclic dart order around every vertex.
    signs : tuple of int
        +1 or -1 for every edge.
    name : str
        Free-form name, kept through serialisation.
    expected_chi : int, optional
        Declared Euler characteristic; checked against face tracing on load.
    check : bool
        Validate on construction and raise ``InvalidEmbedding``.
    """

    graph: Multigraph
    rotation: tuple[tuple[Dart, ...], ...]
    signs: tuple[int, ...]
    name: str = ""
    expected_chi: Optional[int] = None
    check: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(
            self,
            "rotation",
            tuple(tuple(Dart(*d) for d in darts) for darts in self.rotation),
        )
        object.__setattr__(self, "signs", tuple(int(s) for s in self.signs))
        if self.check:
            violations = validate(self)
            if violations:
                raise InvalidEmbedding(violations)
            if self.expected_chi is not None:
                chi = _traced_chi(self)
                if chi != self.expected_chi:
                    raise ChiMismatch(
                        f"declared Euler characteristic {self.expected_chi}, "
                        f"traced {chi}"
                    )

    @cached_property
    def _position(self) -> dict[Dart, tuple[int, int]]:
        return {
            d: (v, i)
            for v, darts in enumerate(self.rotation)
            for i, d in enumerate(darts)
        }

    def vertex(self, dart: Dart) -> int:
        return self.graph.edges[dart.edge][dart.end]

    def position(self, dart: Dart) -> int:
        """Index of ``dart`` in the rotation of its vertex."""
        return self._position[dart][1]

    def succ(self, dart: Dart) -> Dart:
        v, i = self._position[dart]
        darts = self.rotation[v]
        return darts[(i + 1) % len(darts)]

    def pred(self, dart: Dart) -> Dart:
        v, i = self._position[dart]
        darts = self.rotation[v]
        return darts[i - 1]

    def next_state(self, state: State) -> State:
        """Follow a face boundary one edge further."""
        dart, o = state
        arrival = dart.twin
        o = o * self.signs[dart.edge]
        return (self.succ(arrival) if o == 1 else self.pred(arrival)), o

    def mirror(self, state: State) -> State:
        """The state that walks the same edge of the same face backwards."""
        dart, o = state
        return dart.twin, -o * self.signs[dart.edge]

    def states(self):
        """All (dart, orientation) pairs, smallest dart first."""
        for e in range(self.graph.edge_count):
            for end in (0, 1):
                for o in (1, -1):
                    yield Dart(e, end), o

    def flip(self, vertex: int) -> EmbeddedGraph:
        """Reverse the rotation at ``vertex`` and negate its edge signs."""
        rotation = list(self.rotation)
        rotation[vertex] = tuple(reversed(rotation[vertex]))
        signs = list(self.signs)
        for e in self.graph.incidence[vertex]:
            signs[e] = -signs[e]
        return replace(self, rotation=tuple(rotation), signs=tuple(signs))

    def induced(
        self, edges
    ) -> tuple[EmbeddedGraph, tuple[int, ...], tuple[int, ...]]:
        """Embedding of the subgraph spanned by ``edges``.

        Rotations and signs are inherited. Vertices without kept edges are
        dropped and the rest relabelled in increasing order.

        Returns
        -------
        sub : EmbeddedGraph
        vertex_map : tuple of int
            Original vertex of each vertex of ``sub``.
        edge_map : tuple of int
            Original edge of each edge of ``sub``.
        """
        edge_map = tuple(sorted(set(edges)))
        vertex_map = tuple(
            sorted({w for e in edge_map for w in self.graph.edges[e]})
        )
        new_vertex = {v: i for i, v in enumerate(vertex_map)}
        new_edge = {e: i for i, e in enumerate(edge_map)}
        sub_graph = Multigraph(
            len(vertex_map),
            tuple(
                (new_vertex[u], new_vertex[v])
                for u, v in (self.graph.edges[e] for e in edge_map)
            ),
        )
        rotation = tuple(
            tuple(
                Dart(new_edge[d.edge], d.end)
                for d in self.rotation[v]
                if d.edge in new_edge
            )
            for v in vertex_map
        )
        signs = tuple(self.signs[e] for e in edge_map)
        sub = EmbeddedGraph(sub_graph, rotation, signs)
        return sub, vertex_map, edge_map

    def __repr__(self) -> str:
        name = f" {self.name}" if self.name else ""
        return (
            f"<EmbeddedGraph{name}: {self.graph.vertex_count} vertices, "
            f"{self.graph.edge_count} edges>"
        )


def validate(e: EmbeddedGraph) -> list[str]:
    """Every violated invariant of ``e``; an empty list means valid."""
    g = e.graph
    violations = []
    if len(e.rotation) != g.vertex_count:
        violations.append(
            f"rotation lists {len(e.rotation)} vertices, graph has "
            f"{g.vertex_count}"
        )
    if len(e.signs) != g.edge_count:
        violations.append(
            f"signature lists {len(e.signs)} edges, graph has {g.edge_count}"
        )
    for edge, s in enumerate(e.signs):
        if s not in (1, -1):
            violations.append(f"sign of edge {edge} is {s}, expected +1 or -1")

    counts = Counter()
    for v, darts in enumerate(e.rotation):
        for d in darts:
            if not (0 <= d.edge < g.edge_count and d.end in (0, 1)):
                violations.append(f"dart {tuple(d)} at vertex {v} is unknown")
                continue
            counts[d] += 1
            owner = g.edges[d.edge][d.end]
            if owner != v:
                violations.append(
                    f"dart {tuple(d)} misplaced: listed at vertex {v}, "
                    f"belongs to vertex {owner}"
                )
    for edge in range(g.edge_count):
        for end in (0, 1):
            d = Dart(edge, end)
            if counts[d] == 0:
                violations.append(f"dart {tuple(d)} absent")
            elif counts[d] > 1:
                violations.append(
                    f"dart {tuple(d)} listed {counts[d]} times"
                )
    if not g.is_connected():
        violations.append("graph is not connected")
    if violations:
        return violations

    chi = _traced_chi(e)
    if chi > 2:
        violations.append(f"Euler characteristic {chi} exceeds 2")
    return violations


def _traced_chi(e: EmbeddedGraph) -> int:
    from .faces import trace_faces

    faces = trace_faces(replace(e, check=False))
    return e.graph.vertex_count - e.graph.edge_count + len(faces)


def is_orientable(e: EmbeddedGraph) -> bool:
    """Whether vertex flips can make every sign positive.

    Flips are assigned along a spanning tree so that tree edges become
    positive; the embedding is orientable iff every other edge then is too.
    """
    tree = spanning_tree(e.graph)
    flip = [1] * e.graph.vertex_count
    order = sorted(range(e.graph.vertex_count), key=lambda v: tree.depth[v])
    for v in order[1:]:
        flip[v] = flip[tree.parent[v]] * e.signs[tree.parent_edge[v]]
    return all(
        flip[u] * flip[v] * e.signs[edge] == 1
        for edge, (u, v) in enumerate(e.graph.edges)
    )
