"""Cutting a surface open along a one-faced theta subgraph.

The cut turns an embedding with Euler characteristic 0 into a planar
embedding of a larger graph whose outer face is the fundamental polygon.
Every vertex of the theta subgraph H is split into one copy per corner of
H (a maximal run of rotation darts between consecutive H-darts) and every
edge of H is doubled, one copy for each of its sides.
"""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from ..constants import SideLabel, ThetaPath
from ..cycle_space import EdgeVector
from ..exceptions import NotTheta, SeparatingCycle, TheoremViolation, WrongChi
from ..graph import Multigraph, is_cycle
from ..utils import cyclic_pairwise, pairwise, rotate_to
from .faces import FaceSet, euler_characteristic, trace_faces
from .rotation_system import Dart, EmbeddedGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Theta:
    """Two branch vertices joined by three internally disjoint paths.

    Parameters
    ----------
    paths : dict of ThetaPath to EdgeVector
        ``X`` = x - y, ``Y`` = y - x, ``XY`` = x & y.
    path_vertices : dict of ThetaPath to tuple of int
        Vertices of each path, from ``branch[0]`` to ``branch[1]``.
    branch : tuple of int
        The two vertices of degree 3.
    """

    paths: dict
    path_vertices: dict
    branch: tuple[int, int]

    @cached_property
    def edges(self) -> EdgeVector:
        x, y, xy = (self.paths[p] for p in ThetaPath)
        return x | y | xy

    @property
    def h_edges(self) -> int:
        return self.edges.weight

    @property
    def h_vertices(self) -> int:
        return sum(len(vs) for vs in self.path_vertices.values()) - 4

    def path_of_edge(self, edge: int) -> ThetaPath:
        for path, vector in self.paths.items():
            if edge in vector:
                return path
        raise KeyError(edge)

    def cycle(self, first: ThetaPath, second: ThetaPath) -> EdgeVector:
        """The cycle formed by two of the three paths."""
        return self.paths[first] | self.paths[second]


def _trace_path(g: Multigraph, vector: EdgeVector, start: int, stop: int):
    """Vertices and edges of the path ``vector`` from ``start`` to ``stop``.

    Returns ``None`` when the two are not joined inside ``vector``.
    """
    sub = g.to_networkx(vector.edges())
    try:
        vertices = nx.shortest_path(sub, start, stop)
    except nx.NetworkXNoPath:
        return None
    edges = [next(iter(sub[u][v])) for u, v in pairwise(vertices)]
    return vertices, edges


def theta_subgraph(g: Multigraph, x: EdgeVector, y: EdgeVector) -> Theta:
    """Decompose ``x | y`` into the three paths of a theta graph."""
    if not (is_cycle(g, x) and is_cycle(g, y)):
        raise NotTheta("x and y must both be cycles")
    shared = x & y
    if not shared:
        raise NotTheta("x and y share no edge")
    degrees = g.degrees(x | y)
    branch = [int(v) for v in (degrees == 3).nonzero()[0]]
    if len(branch) != 2 or any(d not in (0, 2, 3) for d in degrees):
        raise NotTheta(
            f"x | y has degree sequence {sorted(degrees.tolist())}, "
            "expected two vertices of degree 3 and the rest of degree 2"
        )
    paths = {ThetaPath.X: x - y, ThetaPath.Y: y - x, ThetaPath.XY: shared}
    path_vertices = {}
    for path, vector in paths.items():
        traced = _trace_path(g, vector, branch[0], branch[1])
        if traced is None or len(traced[1]) != vector.weight:
            raise NotTheta(f"path {path.value} is not a branch path")
        path_vertices[path] = tuple(traced[0])
    return Theta(paths, path_vertices, (branch[0], branch[1]))


@dataclass(frozen=True)
class Side:
    """One of the six sides of the fundamental polygon.

    ``edges`` and ``vertices`` are disk ids in boundary-walk order;
    ``vertices`` includes both corner vertices.
    """

    label: SideLabel
    path: ThetaPath
    start: int
    edges: tuple[int, ...]
    vertices: tuple[int, ...]

    @property
    def interior(self) -> tuple[int, ...]:
        return self.vertices[1:-1]


@dataclass(frozen=True, eq=False)
class CutPolygon:
    """Result of cutting an embedding along a theta subgraph.

    Parameters
    ----------
    source : EmbeddedGraph
        The embedding that was cut.
    theta : Theta
        The subgraph cut along.
    disk : EmbeddedGraph
        Planar embedding of the cut graph.
    disk_faces : FaceSet
        Faces of ``disk``; one of them is the outer face.
    outer_face : int
        Index of the outer face in ``disk_faces``.
    edge_map : tuple of int
        Original edge of every disk edge.
    vertex_map : tuple of int
        Original vertex of every disk vertex.
    face_map : dict of int to int
        Original face of every interior disk face.
    boundary_walk : tuple of Dart
        Darts of the outer face, starting at a branch-vertex copy.
    sides : tuple of Side
        The six sides in boundary order.
    """

    source: EmbeddedGraph
    theta: Theta
    disk: EmbeddedGraph
    disk_faces: FaceSet
    outer_face: int
    edge_map: tuple[int, ...]
    vertex_map: tuple[int, ...]
    face_map: dict
    boundary_walk: tuple[Dart, ...]
    sides: tuple[Side, ...]

    @property
    def interior_faces(self) -> list[int]:
        return [f for f in range(len(self.disk_faces)) if f != self.outer_face]

    @cached_property
    def boundary_edges(self) -> frozenset:
        return frozenset(d.edge for d in self.boundary_walk)

    @cached_property
    def boundary_vertices(self) -> tuple[int, ...]:
        return tuple(self.disk.vertex(d) for d in self.boundary_walk)

    @cached_property
    def sides_of_vertex(self) -> dict[int, tuple[int, ...]]:
        """Indices of the sides each boundary vertex lies on."""
        owner = {}
        for k, side in enumerate(self.sides):
            for v in side.vertices:
                owner.setdefault(v, [])
                if k not in owner[v]:
                    owner[v].append(k)
        return {v: tuple(ks) for v, ks in owner.items()}

    @cached_property
    def inner_face(self) -> dict[int, int]:
        """Interior face on the inside of every boundary edge."""
        return {
            d.edge: next(
                (
                    f
                    for f in self.disk_faces.faces_of_edge[d.edge]
                    if f != self.outer_face
                ),
                self.outer_face,
            )
            for d in self.boundary_walk
        }

    @cached_property
    def disk_face(self) -> dict[int, int]:
        """Interior disk face of every original face."""
        return {original: f for f, original in self.face_map.items()}

    def side(self, label: SideLabel) -> Side:
        return next(s for s in self.sides if s.label == label)

    def project(self, disk_vector: EdgeVector) -> EdgeVector:
        """Image of a disk edge set in the original graph, over GF(2)."""
        return EdgeVector.from_edges(
            self.source.graph.edge_count,
            (self.edge_map[e] for e in disk_vector.edges()),
        )


def _side_of(e: EmbeddedGraph, dart: Dart, corner: str) -> int:
    """Which copy of an H-edge bounds the corner after or before ``dart``.

    Copy 0 is the side met by a face that leaves the first endpoint in the
    positive direction; sides are transported across the edge using its
    sign.
    """
    if dart.end == 0 or e.signs[dart.edge] == -1:
        return 0 if corner == "pred" else 1
    return 0 if corner == "succ" else 1


def _split(e: EmbeddedGraph, in_h: EdgeVector):
    g = e.graph
    edge_map, new_edge = [], {}
    for edge in range(g.edge_count):
        for side in (0, 1) if edge in in_h else (None,):
            new_edge[edge, side] = len(edge_map)
            edge_map.append(edge)

    ends = [[None, None] for _ in edge_map]
    rotation, vertex_map, is_copy = [], [], []
    for v, darts in enumerate(e.rotation):
        n = len(darts)
        anchors = [i for i, d in enumerate(darts) if d.edge in in_h]
        if not anchors:
            blocks = [[(d, None) for d in darts]]
        else:
            blocks = []
            for i, j in cyclic_pairwise(anchors):
                a, b = darts[i], darts[j]
                block = [(a, _side_of(e, a, "succ"))]
                block += [
                    (darts[(i + t) % n], None) for t in range(1, (j - i) % n)
                ]
                block.append((b, _side_of(e, b, "pred")))
                blocks.append(block)
        for block in blocks:
            c = len(rotation)
            darts_at_c = []
            for d, side in block:
                ne = new_edge[d.edge, side]
                ends[ne][d.end] = c
                darts_at_c.append(Dart(ne, d.end))
            rotation.append(tuple(darts_at_c))
            vertex_map.append(v)
            is_copy.append(bool(anchors))

    if any(None in pair for pair in ends):
        raise TheoremViolation("edge copy left without an endpoint")
    disk = EmbeddedGraph(
        Multigraph(len(rotation), tuple(tuple(pair) for pair in ends)),
        tuple(rotation),
        tuple(e.signs[edge] for edge in edge_map),
        name=f"{e.name} cut" if e.name else "cut",
    )
    return disk, tuple(edge_map), tuple(vertex_map), tuple(is_copy)


def _cut_transits(disk: EmbeddedGraph, walk, is_copy) -> int:
    """Number of times ``walk`` turns through a corner opened by the cut."""
    count = 0
    for i, (dart, o) in enumerate(walk):
        arrival = walk[i - 1][0].twin
        c = disk.vertex(dart)
        if not is_copy[c]:
            continue
        k = len(disk.rotation[c])
        pos = disk.position(arrival)
        corner = pos if o == 1 else (pos - 1) % k
        if corner == k - 1:
            count += 1
    return count


def cut_along_theta(
    e: EmbeddedGraph, x: EdgeVector, y: EdgeVector
) -> CutPolygon:
    """Cut the surface of ``e`` open along the theta subgraph ``x | y``.

    Raises
    ------
    WrongChi
        The Euler characteristic of ``e`` is not 0.
    NotTheta
        ``x | y`` is not a theta subgraph.
    SeparatingCycle
        The induced embedding of ``x | y`` has more than one face.
    TheoremViolation
        The constructed polygon fails one of its invariants.
    """
    chi = euler_characteristic(e)
    if chi != 0:
        raise WrongChi(f"cutting needs Euler characteristic 0, received {chi}")
    g = e.graph
    theta = theta_subgraph(g, x, y)
    sub, _, _ = e.induced(theta.edges.edges())
    sub_faces = trace_faces(sub)
    if len(sub_faces) != 1:
        raise SeparatingCycle(
            f"x | y has {len(sub_faces)} faces in its induced embedding"
        )

    disk, edge_map, vertex_map, is_copy = _split(e, theta.edges)
    disk_faces = trace_faces(disk)
    transits = [_cut_transits(disk, walk, is_copy) for walk in disk_faces]
    outer = [f for f, t in enumerate(transits) if t]
    if len(outer) != 1:
        raise TheoremViolation(
            f"cut produced {len(outer)} boundary faces",
            {"transits": transits},
        )
    outer_face = outer[0]

    g_faces = trace_faces(e)
    face_map = {}
    for f, walk in enumerate(disk_faces):
        if f == outer_face:
            continue
        dart, o = walk[0]
        face_map[f] = g_faces.face_of_state[
            Dart(edge_map[dart.edge], dart.end), o
        ]

    walk = disk_faces.darts(outer_face)
    vertices = [disk.vertex(d) for d in walk]
    corners = [
        i for i, v in enumerate(vertices) if vertex_map[v] in theta.branch
    ]
    if len(corners) != 6:
        raise TheoremViolation(
            f"polygon has {len(corners)} corners, expected 6",
            {"boundary": vertices},
        )
    shift = corners[0]
    walk = rotate_to(walk, shift)
    vertices = rotate_to(vertices, shift)
    corners = [i - shift for i in corners] + [len(walk)]

    sides, seen = [], set()
    for k in range(6):
        start, stop = corners[k], corners[k + 1]
        edges = tuple(d.edge for d in walk[start:stop])
        paths = {theta.path_of_edge(edge_map[edge]) for edge in edges}
        if len(paths) != 1:
            raise TheoremViolation(
                f"side {k} mixes theta paths {sorted(p.value for p in paths)}"
            )
        path = paths.pop()
        label = SideLabel.for_path(path, primed=path in seen)
        seen.add(path)
        side_vertices = tuple(vertices[start:stop]) + (
            vertices[stop % len(walk)],
        )
        sides.append(Side(label, path, start, edges, side_vertices))

    cut = CutPolygon(
        source=e,
        theta=theta,
        disk=disk,
        disk_faces=disk_faces,
        outer_face=outer_face,
        edge_map=edge_map,
        vertex_map=vertex_map,
        face_map=face_map,
        boundary_walk=tuple(walk),
        sides=tuple(sides),
    )
    violations = check_cut_invariants(cut)
    if violations:
        raise TheoremViolation(
            "cut polygon invariants violated", {"violations": violations}
        )
    logger.debug(
        "cut along theta with %d vertices and %d edges: sides %s",
        theta.h_vertices,
        theta.h_edges,
        [s.label.value for s in cut.sides],
    )
    return cut


def check_cut_invariants(cut: CutPolygon) -> list[str]:
    """Every violated invariant of ``cut``; empty when all hold."""
    g, disk, theta = cut.source.graph, cut.disk.graph, cut.theta
    h_v, h_e = theta.h_vertices, theta.h_edges
    g_faces = trace_faces(cut.source)
    violations = []

    if disk.vertex_count != g.vertex_count + h_v + 2:
        violations.append(
            f"disk has {disk.vertex_count} vertices, expected "
            f"{g.vertex_count + h_v + 2}"
        )
    if disk.edge_count != g.edge_count + h_e:
        violations.append(
            f"disk has {disk.edge_count} edges, expected {g.edge_count + h_e}"
        )
    if len(cut.interior_faces) != len(g_faces):
        violations.append(
            f"disk has {len(cut.interior_faces)} interior faces, expected "
            f"{len(g_faces)}"
        )
    chi = disk.vertex_count - disk.edge_count + len(cut.disk_faces)
    if chi != 2:
        violations.append(f"disk Euler characteristic is {chi}, expected 2")
    if len(cut.boundary_walk) != 2 * h_e:
        violations.append(
            f"boundary has {len(cut.boundary_walk)} darts, expected {2 * h_e}"
        )

    for path in ThetaPath:
        ks = [k for k, s in enumerate(cut.sides) if s.path == path]
        if len(ks) != 2:
            violations.append(f"path {path.value} labels {len(ks)} sides")
        elif (ks[1] - ks[0]) % 6 in (1, 5):
            violations.append(f"both sides of path {path.value} are adjacent")

    multiplicity = Counter(cut.edge_map)
    for edge in range(g.edge_count):
        expected = 2 if edge in theta.edges else 1
        if multiplicity[edge] != expected:
            violations.append(
                f"edge {edge} has {multiplicity[edge]} copies, expected "
                f"{expected}"
            )
    if sorted(cut.face_map.values()) != list(range(len(g_faces))):
        violations.append("face map is not a bijection")

    projected = Counter(
        cut.project(cut.disk_faces.boundaries[f]) for f in cut.interior_faces
    )
    if projected != Counter(g_faces.boundaries):
        violations.append(
            "interior face boundaries do not project onto the original faces"
        )
    return violations
