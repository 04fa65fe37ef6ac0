from dataclasses import replace

import pytest

from sparse_cycle_basis.embedding import (
    Dart,
    EmbeddedGraph,
    describe_surface,
    euler_characteristic,
    is_orientable,
    surface_name,
    trace_faces,
    validate,
)
from sparse_cycle_basis.exceptions import ChiMismatch, InvalidEmbedding
from sparse_cycle_basis.fixtures import Fixture, with_pendant_path
from sparse_cycle_basis.graph import Multigraph

# name: (vertices, edges, faces, chi, orientable, genus, surface name)
EXPECTED = {
    Fixture.TRIANGLE: (3, 3, 2, 2, True, 0, "sphere"),
    Fixture.DIGON: (2, 2, 2, 2, True, 0, "sphere"),
    Fixture.K4_SPHERE: (4, 6, 4, 2, True, 0, "sphere"),
    Fixture.CUBE_SPHERE: (8, 12, 6, 2, True, 0, "sphere"),
    Fixture.K5_TORUS: (5, 10, 5, 0, True, 1, "torus"),
    Fixture.K33_TORUS: (6, 9, 3, 0, True, 1, "torus"),
    Fixture.K7_TORUS: (7, 21, 14, 0, True, 1, "torus"),
    Fixture.K5_KLEIN: (5, 10, 5, 0, False, 2, "Klein bottle"),
    Fixture.K5_PROJECTIVE: (5, 10, 6, 1, False, 1, "projective plane"),
    Fixture.K6_PROJECTIVE: (6, 15, 10, 1, False, 1, "projective plane"),
    Fixture.K5_DOUBLE_TORUS: (5, 10, 3, -2, True, 2, "orientable genus 2"),
}


@pytest.mark.parametrize(
    "fixture,expected", list(EXPECTED.items()), ids=lambda p: str(p)
)
def test_fixture_surfaces(fixture, expected):
    n, m, f, chi, orientable, genus, name = expected
    e = fixture()
    assert (e.graph.vertex_count, e.graph.edge_count) == (n, m)
    assert len(trace_faces(e)) == f
    assert euler_characteristic(e) == chi == e.expected_chi
    assert is_orientable(e) is orientable
    surface = describe_surface(e)
    assert (surface.orientable, surface.genus, surface.chi) == (
        orientable,
        genus,
        chi,
    )
    assert surface.name == name
    assert surface_name(e) == (orientable, genus)


def test_faces_cover_every_edge_twice(embedded):
    faces = trace_faces(embedded)
    assert all(len(sides) == 2 for sides in faces.faces_of_edge)
    assert sum(len(walk) for walk in faces) == 2 * embedded.graph.edge_count


def test_face_boundaries_are_even(embedded):
    g = embedded.graph
    for boundary in trace_faces(embedded).boundaries:
        assert g.is_even(boundary)


def test_face_walks_close(embedded):
    faces = trace_faces(embedded)
    for walk in faces:
        assert embedded.next_state(walk[-1]) == walk[0]


def test_mirror_is_an_involution(embedded):
    for state in embedded.states():
        assert embedded.mirror(embedded.mirror(state)) == state


def test_k7_faces_are_triangles():
    faces = trace_faces(Fixture.K7_TORUS())
    assert {len(walk) for walk in faces} == {3}


@pytest.mark.parametrize("vertex", range(5))
def test_flip_preserves_surface(vertex):
    for fixture in (Fixture.K5_TORUS, Fixture.K5_KLEIN, Fixture.K5_PROJECTIVE):
        e = fixture()
        flipped = e.flip(vertex)
        assert len(trace_faces(flipped)) == len(trace_faces(e))
        assert is_orientable(flipped) is is_orientable(e)
        assert describe_surface(flipped) == describe_surface(e)


def test_flipping_every_vertex_twice_is_identity():
    e = Fixture.K5_KLEIN()
    flipped = e
    for v in range(5):
        flipped = flipped.flip(v).flip(v)
    assert flipped == e


def test_validate_reports_misplaced_dart():
    e = Fixture.TRIANGLE()
    rotation = list(e.rotation)
    # move vertex 0's first dart onto vertex 1
    moved = rotation[0][0]
    rotation[0] = rotation[0][1:]
    rotation[1] = rotation[1] + (moved,)
    broken = replace(e, rotation=tuple(rotation), check=False)
    violations = validate(broken)
    assert any("misplaced" in v for v in violations)
    with pytest.raises(InvalidEmbedding) as info:
        replace(e, rotation=tuple(rotation))
    assert info.value.violations == violations


def test_validate_reports_missing_and_repeated_darts():
    g = Multigraph(2, ((0, 1),))
    e = EmbeddedGraph(
        g, ((Dart(0, 0), Dart(0, 0)), ()), (1,), check=False
    )
    violations = validate(e)
    assert "dart (0, 0) listed 2 times" in violations
    assert "dart (0, 1) absent" in violations


def test_validate_reports_bad_sign():
    g = Multigraph(2, ((0, 1),))
    e = EmbeddedGraph(g, ((Dart(0, 0),), (Dart(0, 1),)), (0,), check=False)
    assert validate(e) == ["sign of edge 0 is 0, expected +1 or -1"]


def test_validate_accepts_fixtures(embedded):
    assert validate(embedded) == []


def test_declared_chi_is_checked():
    e = Fixture.K5_TORUS()
    with pytest.raises(ChiMismatch):
        replace(e, expected_chi=-2)


def test_induced_embedding_relabels():
    e = Fixture.K4_SPHERE()
    # the triangle 1-2-3 of K4: edges (1,2), (1,3), (2,3)
    sub, vertex_map, edge_map = e.induced([3, 4, 5])
    assert vertex_map == (1, 2, 3)
    assert edge_map == (3, 4, 5)
    assert len(trace_faces(sub)) == 2


def test_single_vertex_has_one_face():
    e = EmbeddedGraph(Multigraph(1, ()), ((),), ())
    assert len(trace_faces(e)) == 1
    assert euler_characteristic(e) == 2


def test_support_matches_boundary_without_repeats(embedded):
    faces = trace_faces(embedded)
    for f in range(len(faces)):
        if len(set(faces.edges(f))) == len(faces.edges(f)):
            assert faces.support(f) == faces.boundaries[f]


def test_support_keeps_pendant_edges():
    e = with_pendant_path(Fixture.TRIANGLE(), 0, length=2)
    faces = trace_faces(e)
    assert len(faces) == 2
    assert euler_characteristic(e) == 2
    host = faces.face_of_state[(Dart(3, 0), 1)]
    assert sorted(faces.support(host).edges()) == [0, 1, 2, 3, 4]
    assert sorted(faces.boundaries[host].edges()) == [0, 1, 2]
