"""Face tracing, Euler characteristic and surface classification."""
from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property

from ..cycle_space import EdgeVector
from ..exceptions import InvalidEmbedding, InvalidParity
from ..graph import _require_connected
from .rotation_system import Dart, EmbeddedGraph, State, is_orientable

logger = logging.getLogger(__name__)


class FaceSet(Sequence[tuple[State, ...]]):
    """The faces of an embedding as closed walks of (dart, orientation).

    Indexing yields the walk of a face. Each face is listed once, in the
    direction in which it was first met.

    Parameters
    ----------
    embedded : EmbeddedGraph
        The traced embedding.
    walks : sequence of tuple of State
        One closed walk per face.
    """

    def __init__(self, embedded: EmbeddedGraph, walks) -> None:
        super().__init__()
        self.embedded = embedded
        self._walks = tuple(tuple(w) for w in walks)
        universe = embedded.graph.edge_count
        self.boundaries = tuple(
            EdgeVector.from_edges(universe, (d.edge for d, _ in walk))
            for walk in self._walks
        )

    def __len__(self) -> int:
        return len(self._walks)

    def __getitem__(self, key):
        return self._walks[key]

    def darts(self, face: int) -> tuple[Dart, ...]:
        return tuple(d for d, _ in self._walks[face])

    def vertices(self, face: int) -> tuple[int, ...]:
        """Vertex sequence of the walk, one entry per traversed edge."""
        return tuple(self.embedded.vertex(d) for d, _ in self._walks[face])

    def edges(self, face: int) -> tuple[int, ...]:
        return tuple(d.edge for d, _ in self._walks[face])

    def support(self, face: int) -> EdgeVector:
        """Every edge the walk traverses, including those met twice.

        Unlike ``boundaries[face]`` this keeps bridges and pendant edges
        that lie on ``face`` from both sides.
        """
        universe = self.embedded.graph.edge_count
        return EdgeVector.from_edges(universe, set(self.edges(face)))

    @cached_property
    def face_of_state(self) -> dict[State, int]:
        """Face index of every state, including the reversed traversals."""
        owner = {}
        for f, walk in enumerate(self._walks):
            for state in walk:
                owner[state] = f
                owner[self.embedded.mirror(state)] = f
        return owner

    @cached_property
    def faces_of_edge(self) -> tuple[tuple[int, ...], ...]:
        """The two face sides of every edge (a face may appear twice)."""
        sides = [[] for _ in range(self.embedded.graph.edge_count)]
        for f, walk in enumerate(self._walks):
            for d, _ in walk:
                sides[d.edge].append(f)
        return tuple(tuple(s) for s in sides)

    def __repr__(self) -> str:
        lengths = [len(w) for w in self._walks]
        return f"<FaceSet: {len(self)} faces, lengths {lengths}>"


def trace_faces(e: EmbeddedGraph) -> FaceSet:
    """Trace every face of ``e``.

    Each face corresponds to two orbits of the successor map on
    (dart, orientation) states, one per direction. Orbits are started from
    the smallest unused state and the mirrored orbit is consumed with it.
    """
    if e.graph.edge_count == 0:
        return FaceSet(e, [()])
    limit = 4 * e.graph.edge_count
    used = set()
    walks = []
    for start in e.states():
        if start in used:
            continue
        walk = []
        state = start
        while True:
            if state in used or len(walk) > limit:
                raise InvalidEmbedding(
                    [f"face walk from {start} does not close"]
                )
            walk.append(state)
            used.add(state)
            used.add(e.mirror(state))
            state = e.next_state(state)
            if state == start:
                break
        walks.append(walk)
    faces = FaceSet(e, walks)
    logger.debug("traced %s", faces)
    return faces


def euler_characteristic(e: EmbeddedGraph) -> int:
    """``|V| - |E| + |F|`` of the embedding."""
    _require_connected(e.graph)
    return e.graph.vertex_count - e.graph.edge_count + len(trace_faces(e))


@dataclass(frozen=True)
class Surface:
    """A closed surface up to homeomorphism.

    Parameters
    ----------
    orientable : bool
    genus : int
        Orientable genus, or number of cross-caps if non-orientable.
    chi : int
        Euler characteristic.
    """

    orientable: bool
    genus: int
    chi: int

    @property
    def name(self) -> str:
        if self.orientable:
            return {0: "sphere", 1: "torus"}.get(
                self.genus, f"orientable genus {self.genus}"
            )
        return {1: "projective plane", 2: "Klein bottle"}.get(
            self.genus, f"non-orientable genus {self.genus}"
        )

    def __str__(self) -> str:
        kind = "orientable" if self.orientable else "non-orientable"
        return f"{kind} genus {self.genus}"


def describe_surface(e: EmbeddedGraph) -> Surface:
    chi = euler_characteristic(e)
    orientable = is_orientable(e)
    if orientable:
        if chi % 2:
            raise InvalidParity(
                f"orientable embedding with odd Euler characteristic {chi}"
            )
        return Surface(True, (2 - chi) // 2, chi)
    if chi > 1:
        raise InvalidParity(
            f"non-orientable embedding with Euler characteristic {chi}"
        )
    return Surface(False, 2 - chi, chi)


def surface_name(e: EmbeddedGraph) -> tuple[bool, int]:
    """(orientable, genus) of the surface carrying ``e``."""
    surface = describe_surface(e)
    return surface.orientable, surface.genus
