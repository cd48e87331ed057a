from collections import Counter
from fractions import Fraction

import pytest

from corpus import CORPUS, SPHERES, get
from planarcurv.analysis import census
from planarcurv.curvature import combinatorial_curvature, psi_curvature, vertex_pattern
from planarcurv.embedding import isomorphic, validate_tessellation
from planarcurv.errors import EmptyInterior, PatchModeUnsupported
from planarcurv.generators import (antiprism, cube, octahedron, rhombille, square_lattice,
                                   tetrahedron, truncated_cube)
from planarcurv.operators import (census_transfer_check, dual, medial,
                                  psi_medial_transfer_check, transfer_census)


F13 = Fraction(1, 3)


def cuboctahedron():
    # medial of the octahedron: the same solid reached from the other side
    return medial(octahedron()).medial


def test_dual_pairs():
    assert isomorphic(dual(cube()).dual, octahedron())
    assert isomorphic(dual(dual(cube()).dual).dual, cube())


def test_dual_of_truncated_cube_has_negative_vertex():
    d = dual(truncated_cube()).dual
    eight = [x for x in range(d.vertex_count) if d.degree(x) == 8]
    assert len(eight) == 6
    for x in eight:
        assert vertex_pattern(d, x) == (3,) * 8
        assert combinatorial_curvature(d, x) == -F13
    assert isomorphic(dual(d).dual, truncated_cube())


def test_dual_needs_sphere():
    with pytest.raises(PatchModeUnsupported):
        dual(square_lattice(4, 4))


def test_dual_mappings_are_bijections():
    t = truncated_cube()
    d = dual(t)
    assert sorted(d.face_to_vertex.values()) == list(range(d.dual.vertex_count))
    assert sorted(d.vertex_to_face.values()) == list(range(d.dual.face_count))
    assert sorted(d.edge_to_edge.values()) == list(range(d.dual.edge_count))
    for x, f in d.vertex_to_face.items():
        assert d.dual.face_degree(f) == t.degree(x)


def test_medial_classics():
    m = medial(cube())
    assert Counter(m.medial.face_degree(f) for f in range(m.medial.face_count)) == {3: 8, 4: 6}
    assert isomorphic(m.medial, cuboctahedron())
    assert isomorphic(medial(tetrahedron()).medial, octahedron())


def test_medial_of_rhombille():
    g = medial(rhombille(3)).medial
    assert g.interior_vertices
    assert {vertex_pattern(g, x) for x in g.interior_vertices} == {(3, 4, 4, 6)}


def test_medial_of_square_lattice_is_square_lattice():
    g = medial(square_lattice(6, 6)).medial
    assert {vertex_pattern(g, x) for x in g.interior_vertices} == {(4, 4, 4, 4)}


def test_medial_needs_interior():
    with pytest.raises(EmptyInterior):
        medial(square_lattice(2, 2))


def test_transfer_examples():
    t = tetrahedron()
    m = medial(t)
    assert {psi_curvature(t, e) for e in range(6)} == {F13}
    assert {combinatorial_curvature(m.medial, v) for v in range(6)} == {F13}
    lhs, rhs = transfer_census(cube())
    assert lhs == rhs == {3: 8, 4: 6}
    lhs, rhs = transfer_census(tetrahedron())
    assert lhs == rhs == {3: 8}
    lhs, rhs = transfer_census(antiprism(5))
    assert lhs == rhs == {3: 10, 4: 10, 5: 2}
    tc = truncated_cube()
    assert psi_medial_transfer_check(tc)


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_medial_properties(name):
    t = get(name)
    m = medial(t)
    g = m.medial
    # on a patch only medial vertices with complete stars are meaningful
    assert all(g.degree(v) == 4 for v in g.interior_vertices)
    if t.mode == "sphere":
        assert g.interior_vertices == frozenset(range(g.vertex_count))
    assert not validate_tessellation(g)
    assert psi_medial_transfer_check(t, m)
    assert census_transfer_check(t, m)
    for x, f in m.vertex_to_face.items():
        assert g.face_degree(f) == t.degree(x)
    for s, f in m.face_to_face.items():
        assert g.face_degree(f) == t.face_degree(s)
    if t.mode == "patch":
        assert g.interior_vertices == frozenset(t.interior_edges)
    else:
        assert g.face_count == t.vertex_count + t.face_count


@pytest.mark.parametrize("name", sorted(SPHERES))
def test_duality_properties(name):
    t = get(name)
    d = dual(t)
    assert not validate_tessellation(d.dual)
    assert isomorphic(dual(d.dual).dual, t)
    for e in range(t.edge_count):
        assert psi_curvature(t, e) == psi_curvature(d.dual, d.edge_to_edge[e])
    assert isomorphic(medial(t).medial, medial(d.dual).medial)


def test_census_of_cuboctahedron():
    c = census(cuboctahedron())
    assert c.V_k == {4: 12} and c.F_k == {3: 8, 4: 6}
