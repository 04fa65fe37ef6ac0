"""A cycle basis of sparsity 3 for embeddings with Euler characteristic 0.

Start from the face basis, whose two extra elements are fundamental
cycles ``x`` and ``y``. Drop one face ``f0`` and replace ``x, y`` by
``x + h, y + k`` where ``h`` and ``k`` are sums of faces chosen so that the
new pair only overlaps inside ``f0``. The choice of ``h, k, f0`` is made on
the fundamental polygon obtained by cutting along ``x | y``.
"""
from __future__ import annotations

import functools
import itertools
import logging
import operator
from typing import Optional

import networkx as nx

from .bases import BasisLabel, CycleBasis, face_basis
from .constants import CaseTag, Provenance, ThetaPath
from .cycle_space import EdgeVector, vector_sum
from .embedding import (
    CutPolygon,
    EmbeddedGraph,
    FaceSet,
    cut_along_theta,
    euler_characteristic,
    trace_faces,
)
from .exceptions import TheoremViolation, WrongChi
from .graph import fundamental_cycle, spanning_tree
from .replacement import (
    ReplacementWitness,
    apply_replacement,
    check_replacement_preconditions,
)
from .utils import loop_erase

logger = logging.getLogger(__name__)

# (shared role, paired with it into x', paired with it into y')
ROLE_ASSIGNMENTS = (
    (ThetaPath.XY, ThetaPath.X, ThetaPath.Y),
    (ThetaPath.X, ThetaPath.Y, ThetaPath.XY),
    (ThetaPath.Y, ThetaPath.X, ThetaPath.XY),
)


def _non_consecutive(first, second) -> bool:
    return any((a - b) % 6 in (2, 3, 4) for a in first for b in second)


def _face_sum(faces: FaceSet, cut: CutPolygon, disk_faces) -> EdgeVector:
    """Sum in the original graph of the given interior disk faces."""
    return vector_sum(
        (faces.boundaries[cut.face_map[f]] for f in set(disk_faces)),
        cut.source.graph.edge_count,
    )


def _face_union(faces: FaceSet, cut: CutPolygon, disk_faces) -> EdgeVector:
    """Edges on the boundary of at least one of the given disk faces."""
    return functools.reduce(
        operator.or_,
        (faces.boundaries[cut.face_map[f]] for f in disk_faces),
        EdgeVector.zeros(cut.source.graph.edge_count),
    )


def _path_of(theta, vector: EdgeVector) -> Optional[ThetaPath]:
    return next((p for p, v in theta.paths.items() if v == vector), None)


class _PathSplit:
    """Regions of the polygon cut apart by a path ``Q`` inside it.

    Interior faces are joined across every edge not on ``Q``. Each region
    is labelled with the boundary arc it touches, the boundary walk being
    split at positions ``lo`` and ``hi``; ``labels`` is ``None`` when some
    region touches both arcs or neither.
    """

    def __init__(self, cut: CutPolygon, q_edges, lo: int, hi: int) -> None:
        self.cut = cut
        self.q_edges = frozenset(q_edges)
        self.arc = {
            d.edge: 0 if lo <= t < hi else 1
            for t, d in enumerate(cut.boundary_walk)
        }
        self.labels = self._label_regions()

    @classmethod
    def splits(cls, cut: CutPolygon, q_vertices, q_edges):
        """One split per pair of boundary positions of the ends of ``Q``.

        A vertex may be met several times by the boundary walk when the
        polygon is pinched, so every pair of positions is tried.
        """
        walk = cut.boundary_vertices
        starts = [t for t, v in enumerate(walk) if v == q_vertices[0]]
        stops = [t for t, v in enumerate(walk) if v == q_vertices[-1]]
        for start, stop in itertools.product(starts, stops):
            if start != stop:
                yield cls(cut, q_edges, *sorted((start, stop)))

    def _label_regions(self) -> Optional[dict[int, int]]:
        cut = self.cut
        adjacency = nx.Graph()
        adjacency.add_nodes_from(cut.interior_faces)
        for edge, sides in enumerate(cut.disk_faces.faces_of_edge):
            if edge in self.q_edges or cut.outer_face in sides:
                continue
            adjacency.add_edge(*sides)
        region = {}
        for r, component in enumerate(nx.connected_components(adjacency)):
            region.update(dict.fromkeys(component, r))

        touched = {}
        for edge, arc in self.arc.items():
            if edge in self.q_edges:
                continue
            inner = cut.inner_face[edge]
            if inner != cut.outer_face:
                touched.setdefault(region[inner], set()).add(arc)
        labels = {}
        for f in cut.interior_faces:
            arcs = touched.get(region[f], set())
            if len(arcs) != 1:
                logger.debug(
                    "path %s leaves face %d in a region on %d arcs",
                    sorted(self.q_edges),
                    f,
                    len(arcs),
                )
                return None
            labels[f] = next(iter(arcs))
        return labels

    def arcs_of(self, side_index: int) -> set[int]:
        side = self.cut.sides[side_index]
        return {self.arc[e] for e in side.edges if e not in self.q_edges}


def _classification_violations(
    cut: CutPolygon, q_edges, below, shared: ThetaPath
) -> list[str]:
    """Disagreements between a below set and the first-case layout.

    Faces on the two sides of an edge of ``Q`` lie on opposite sides of
    the below set. Off ``Q``, the faces along one copy of the ``shared``
    path are all below and those along the other copy all above.
    """
    violations = []
    q_edges = frozenset(q_edges)
    for edge in sorted(q_edges):
        left, right = cut.disk_faces.faces_of_edge[edge]
        if cut.outer_face in (left, right) or left == right:
            continue
        if (left in below) == (right in below):
            violations.append(
                f"faces {left} and {right} across path edge {edge} "
                "are on the same side"
            )
    first, second = (
        {cut.inner_face[e] for e in side.edges if e not in q_edges}
        - {cut.outer_face}
        for side in cut.sides
        if side.path == shared
    )
    if not (
        (first <= below and not second & below)
        or (second <= below and not first & below)
    ):
        violations.append(
            f"faces along the two copies of p_{shared.value} are not "
            "split into below and above"
        )
    return violations


def case1_violations(
    cut: CutPolygon, faces: FaceSet, witness: ReplacementWitness
) -> list[str]:
    """Check the face classification of a first-case witness.

    ``witness.i_x`` holds the faces labelled below and ``witness.q_path``
    the path they were split along.
    """
    shared = _path_of(cut.theta, witness.x & witness.y)
    if shared is None:
        return ["x and y do not share a theta path"]
    face = cut.disk_face[witness.f0]
    q_path = set(witness.q_path)
    q_edges = [
        e for e in cut.disk_faces.edges(face) if cut.edge_map[e] in q_path
    ]
    below = {cut.disk_face[f] for f in witness.i_x}
    return _classification_violations(cut, q_edges, below, shared)


def _separation_violations(
    cut: CutPolygon, faces: FaceSet, px, py, i_x, i_y, f0_support
) -> list[str]:
    """Disagreements between ``I_x, I_y`` and the second-case layout.

    No face of ``I_x`` meets side ``py`` and no face of ``I_y`` meets side
    ``px``; the boundaries of the two groups only meet inside ``f0``.
    """
    violations = []
    for name, group, other in (("I_x", i_x, py), ("I_y", i_y, px)):
        banned = set(other.edges)
        for f in sorted(group):
            if banned.intersection(cut.disk_faces.edges(f)):
                violations.append(
                    f"{name} face {cut.face_map[f]} meets side "
                    f"{other.label.value}"
                )
    overlap = (
        _face_union(faces, cut, i_x) & _face_union(faces, cut, i_y)
    ) - f0_support
    if overlap:
        violations.append(
            f"I_x and I_y boundaries share edges {list(overlap.edges())} "
            "outside f0"
        )
    return violations


def case2_violations(
    cut: CutPolygon, faces: FaceSet, witness: ReplacementWitness
) -> list[str]:
    """Check the separation of ``I_x`` from ``I_y`` in a second-case witness.

    ``witness.side`` names the copy of the shared path holding the split
    vertex; its neighbours on ``x - y`` and ``y - x`` play ``p_x`` and
    ``p_y``.
    """
    theta = cut.theta
    own_x = _path_of(theta, witness.x - witness.y)
    own_y = _path_of(theta, witness.y - witness.x)
    s = next(
        (
            k
            for k, side in enumerate(cut.sides)
            if side.label.value == witness.side
        ),
        None,
    )
    if None in (own_x, own_y, s):
        return [f"side {witness.side} is not flanked by x and y"]
    flanks = {
        neighbour.path: neighbour
        for neighbour in (cut.sides[s - 1], cut.sides[(s + 1) % 6])
    }
    if set(flanks) != {own_x, own_y}:
        return [f"side {witness.side} is not flanked by x and y"]
    return _separation_violations(
        cut,
        faces,
        flanks[own_x],
        flanks[own_y],
        {cut.disk_face[f] for f in witness.i_x},
        {cut.disk_face[f] for f in witness.i_y},
        faces.support(witness.f0),
    )


def _case1_witness(
    cut: CutPolygon, faces: FaceSet, face: int, q_vertices, q_edges
) -> Optional[ReplacementWitness]:
    theta = cut.theta
    f0 = cut.face_map[face]
    support = faces.support(f0)
    for split in _PathSplit.splits(cut, q_vertices, q_edges):
        if split.labels is None:
            continue
        for z, a, b in ROLE_ASSIGNMENTS:
            ends_ok = all(
                not (
                    len(cut.sides_of_vertex[v]) == 1
                    and cut.sides[cut.sides_of_vertex[v][0]].path == z
                )
                for v in (q_vertices[0], q_vertices[-1])
            )
            if not ends_ok:
                continue
            first, second = (k for k, s in enumerate(cut.sides) if s.path == z)
            arcs_first = split.arcs_of(first)
            arcs_second = split.arcs_of(second)
            if len(arcs_first) > 1 or len(arcs_second) > 1:
                continue
            if arcs_first and arcs_first == arcs_second:
                continue
            if arcs_first:
                below = next(iter(arcs_first))
            elif arcs_second:
                below = 1 - next(iter(arcs_second))
            else:
                below = 0
            below_faces = {
                f for f, arc in split.labels.items() if arc == below
            }
            if _classification_violations(cut, q_edges, below_faces, z):
                continue
            h = _face_sum(faces, cut, below_faces)
            x2, y2 = theta.cycle(a, z), theta.cycle(b, z)
            if check_replacement_preconditions(x2, y2, h, h, support):
                below_original = tuple(
                    sorted(cut.face_map[f] for f in below_faces)
                )
                return ReplacementWitness(
                    x=x2,
                    y=y2,
                    h=h,
                    k=h,
                    f0=f0,
                    case_tag=CaseTag.CASE1,
                    q_path=tuple(cut.edge_map[e] for e in q_edges),
                    i_x=below_original,
                    i_y=below_original,
                )
    return None


def _q_candidates(cut: CutPolygon, face: int):
    """Simple paths along the boundary of ``face`` joining two
    non-consecutive sides, in scan order."""
    owner = cut.sides_of_vertex
    vertices = cut.disk_faces.vertices(face)
    edges = cut.disk_faces.edges(face)
    n = len(vertices)
    for i in range(n):
        if vertices[i] not in owner:
            continue
        for j in range(i + 1, n):
            if vertices[j] not in owner:
                continue
            if not _non_consecutive(owner[vertices[i]], owner[vertices[j]]):
                continue
            for walk_vertices, walk_edges in (
                (vertices[i : j + 1], edges[i:j]),
                (vertices[j:] + vertices[: i + 1], edges[j:] + edges[:i]),
            ):
                q_vertices, q_edges = loop_erase(walk_vertices, walk_edges)
                if q_edges:
                    yield q_vertices, q_edges


def find_case1(
    cut: CutPolygon, faces: FaceSet
) -> Optional[ReplacementWitness]:
    """Replacement data from a face path between non-consecutive sides."""
    for face in cut.interior_faces:
        for q_vertices, q_edges in _q_candidates(cut, face):
            witness = _case1_witness(cut, faces, face, q_vertices, q_edges)
            if witness is not None:
                logger.debug(
                    "first case: path %s on face %d",
                    witness.q_path,
                    witness.f0,
                )
                return witness
            logger.debug("rejected path %s on disk face %d", q_edges, face)
    return None


def find_case2(
    cut: CutPolygon, faces: FaceSet
) -> Optional[ReplacementWitness]:
    """Replacement data from a split vertex on a side between p_x and p_y."""
    disk_faces = cut.disk_faces
    interior = cut.interior_faces
    vertex_sets = {f: set(disk_faces.vertices(f)) for f in interior}
    theta = cut.theta
    for s, side in enumerate(cut.sides):
        before, after = cut.sides[s - 1], cut.sides[(s + 1) % 6]
        if before.path == after.path:
            continue
        for reverse in (False, True):
            px, py = (after, before) if reverse else (before, after)
            walk_vertices = side.vertices[::-1] if reverse else side.vertices
            walk_edges = side.edges[::-1] if reverse else side.edges
            px_vertices = set(px.vertices)
            x2 = theta.cycle(px.path, side.path)
            y2 = theta.cycle(py.path, side.path)
            for i in reversed(range(len(walk_vertices))):
                v0 = walk_vertices[i]
                candidates = [
                    f
                    for f in interior
                    if v0 in vertex_sets[f] and vertex_sets[f] & px_vertices
                ]
                if not candidates:
                    continue
                i_x = {cut.inner_face[e] for e in walk_edges[:i]}
                i_y = {cut.inner_face[e] for e in walk_edges[i:]}
                i_x.discard(cut.outer_face)
                i_y.discard(cut.outer_face)
                h = _face_sum(faces, cut, i_x)
                k = _face_sum(faces, cut, i_y)
                for f in candidates:
                    f0 = cut.face_map[f]
                    support = faces.support(f0)
                    if not check_replacement_preconditions(
                        x2, y2, h, k, support
                    ):
                        continue
                    rejected = _separation_violations(
                        cut, faces, px, py, i_x, i_y, support
                    )
                    if rejected:
                        logger.debug("split at %d rejected: %s", v0, rejected)
                        continue
                    logger.debug(
                        "second case: side %s, v0 %d, face %d",
                        side.label.value,
                        cut.vertex_map[v0],
                        f0,
                    )
                    return ReplacementWitness(
                        x=x2,
                        y=y2,
                        h=h,
                        k=k,
                        f0=f0,
                        case_tag=CaseTag.CASE2,
                        v0=cut.vertex_map[v0],
                        side=side.label.value,
                        i_x=tuple(sorted(cut.face_map[f] for f in i_x)),
                        i_y=tuple(sorted(cut.face_map[f] for f in i_y)),
                    )
    return None


def fundamental_pair(e: EmbeddedGraph) -> tuple[EdgeVector, EdgeVector]:
    """The two fundamental cycles completing the face basis."""
    tree = spanning_tree(e.graph)
    u_edges, _ = face_basis(e, tree)
    x, y = (fundamental_cycle(tree, edge) for edge in u_edges)
    return x, y


def three_basis(
    e: EmbeddedGraph, pair: Optional[tuple[EdgeVector, EdgeVector]] = None
) -> tuple[CycleBasis, ReplacementWitness]:
    """Cycle basis of sparsity at most 3 for an embedding with chi = 0.

    Parameters
    ----------
    e : EmbeddedGraph
        A cellular embedding with Euler characteristic 0.
    pair : (EdgeVector, EdgeVector), optional
        Cycles ``x, y`` that complete the faces minus one to a basis.
        Defaults to :func:`fundamental_pair`.

    Returns
    -------
    basis : CycleBasis
        All faces but ``witness.f0``, then ``x + h`` and ``y + k``.
    witness : ReplacementWitness

    Raises
    ------
    WrongChi
        The Euler characteristic is not 0.
    NotTheta
        A given pair that overlaps is not a theta graph.
    SeparatingCycle
        ``x | y`` has more than one face in its induced embedding.
    TheoremViolation
        No replacement was found or the result is not a 3-sparse basis.
    """
    chi = euler_characteristic(e)
    if chi != 0:
        raise WrongChi(f"needs Euler characteristic 0, received {chi}")
    g = e.graph
    x, y = fundamental_pair(e) if pair is None else pair
    faces = trace_faces(e)

    if not x & y:
        zero = EdgeVector.zeros(g.edge_count)
        witness = ReplacementWitness(
            x, y, zero, zero, len(faces) - 1, CaseTag.DISJOINT
        )
    else:
        cut = cut_along_theta(e, x, y)
        witness = find_case1(cut, faces) or find_case2(cut, faces)
        if witness is None:
            raise TheoremViolation(
                "no replacement pair found on the fundamental polygon",
                {
                    "x": list(x.edges()),
                    "y": list(y.edges()),
                    "sides": [
                        [cut.edge_map[d] for d in s.edges] for s in cut.sides
                    ],
                },
            )

    x2, y2 = apply_replacement(
        witness.x,
        witness.y,
        witness.h,
        witness.k,
        faces.support(witness.f0),
    )
    elements, labels = [], []
    for f, boundary in enumerate(faces.boundaries):
        if f != witness.f0:
            elements.append(boundary)
            labels.append(BasisLabel(Provenance.FACE, f))
    elements += [x2, y2]
    labels += [
        BasisLabel(Provenance.MODIFIED_X),
        BasisLabel(Provenance.MODIFIED_Y),
    ]
    basis = CycleBasis(g, elements, labels)
    is_basis, k = basis.verify()
    if not is_basis or k > 3:
        raise TheoremViolation(
            f"constructed family is_basis={is_basis} with sparsity {k}",
            witness.as_dict(),
        )
    logger.info(
        "three-basis of %r via %s, sparsity %d", e, witness.case_tag.value, k
    )
    return basis, witness
