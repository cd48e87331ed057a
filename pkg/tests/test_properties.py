"""Property-based checks over randomly composed and relabelled graphs."""

from collections import Counter
from fractions import Fraction

from hypothesis import assume, given, settings, strategies as st

import oracles
from planarcurv.analysis import census, discharge, enumerate_positive_patterns
from planarcurv.curvature import (classify, combinatorial_curvature, curvature_of_pattern,
                                  psi_corner_identity_check, psi_curvature, total_curvature)
from planarcurv.embedding import (as_patch, build_from_rotation_system, isomorphic,
                                  validate_tessellation)
from planarcurv.generators import (antiprism, glued_sharp_pair, hexagonal, pentagon_barrel,
                                   platonic, PLATONIC, prism, rhombille, rhombitrihexagonal,
                                   sharp_big_face, square_lattice, tiling_3_12_12, triangular,
                                   trihexagonal, truncate)
from planarcurv.io import parse, serialize
from planarcurv.operators import census_transfer_check, dual, medial, psi_medial_transfer_check

SETTINGS = settings(max_examples=25, deadline=None)

bases = st.one_of(
    st.sampled_from(sorted(PLATONIC)).map(platonic),
    st.integers(3, 12).map(prism),
    st.integers(3, 12).map(antiprism),
    st.integers(3, 7).map(pentagon_barrel),
)


def _apply(t, op):
    if op == "dual":
        return dual(t).dual
    if op == "medial":
        return medial(t).medial
    return truncate(t)


spheres = st.builds(lambda t, ops: _compose(t, ops), bases,
                    st.lists(st.sampled_from(["dual", "medial", "truncate"]), max_size=2))


def _compose(t, ops):
    for op in ops:
        if t.edge_count > 150:
            break
        t = _apply(t, op)
    return t


windows = st.one_of(
    st.builds(square_lattice, st.integers(3, 7), st.integers(3, 7)),
    st.builds(trihexagonal, st.integers(1, 3)),
    st.builds(rhombitrihexagonal, st.integers(1, 2)),
    st.builds(rhombille, st.integers(1, 3)),
    st.builds(tiling_3_12_12, st.integers(1, 2)),
    st.builds(hexagonal, st.integers(1, 3)),
    st.builds(triangular, st.integers(1, 3)),
    st.builds(sharp_big_face, st.integers(8, 12), st.integers(2, 4)),
)


def relabel(t, data):
    n = t.vertex_count
    perm = data.draw(st.permutations(range(n)))
    rot = [None] * n
    for v, nbrs in enumerate(t.rotations):
        shift = data.draw(st.integers(0, len(nbrs) - 1))
        moved = [perm[w] for w in nbrs]
        rot[perm[v]] = moved[shift:] + moved[:shift]
    return build_from_rotation_system(rot)


@SETTINGS
@given(spheres, st.data())
def test_relabelling_preserves_everything(t, data):
    u = relabel(t, data)
    assert isomorphic(t, u)
    assert total_curvature(u) == total_curvature(t) == 2
    assert census(u) == census(t)
    assert Counter(psi_curvature(u, e) for e in range(u.edge_count)) == \
        Counter(psi_curvature(t, e) for e in range(t.edge_count))


@SETTINGS
@given(spheres)
def test_mirror_is_isomorphic(t):
    mirror = build_from_rotation_system([list(reversed(r)) for r in t.rotations])
    assert isomorphic(t, mirror)


@SETTINGS
@given(spheres)
def test_face_tracing_matches_oracle(t):
    ours = Counter(oracles.canonical_cycle(list(t.face_vertices(f))) for f in range(t.face_count))
    assert ours == oracles.face_multiset(t.rotations)
    assert t.vertex_count - t.edge_count + t.face_count == 2


@SETTINGS
@given(spheres)
def test_sphere_invariants(t):
    assert not validate_tessellation(t)
    assert total_curvature(t) == 2
    assert psi_corner_identity_check(t)
    flags = classify(t)
    assert not flags.in_CC or (flags.in_NNG and flags.in_MM)


@SETTINGS
@given(spheres)
def test_duality(t):
    d = dual(t)
    assert isomorphic(dual(d.dual).dual, t)
    assert all(psi_curvature(t, e) == psi_curvature(d.dual, d.edge_to_edge[e])
               for e in range(t.edge_count))
    assert classify(t).in_MM == classify(d.dual).in_MM


@SETTINGS
@given(spheres)
def test_medial_sphere(t):
    m = medial(t)
    g = m.medial
    assert {g.degree(v) for v in range(g.vertex_count)} == {4}
    assert not validate_tessellation(g)
    assert psi_medial_transfer_check(t, m) and census_transfer_check(t, m)
    assert isomorphic(g, medial(dual(t).dual).medial)


@SETTINGS
@given(windows)
def test_medial_window(t):
    assume(t.interior_edges)
    m = medial(t)
    g = m.medial
    assert not validate_tessellation(g)
    assert g.interior_vertices == frozenset(t.interior_edges)
    assert all(g.degree(v) == 4 for v in g.interior_vertices)
    assert psi_medial_transfer_check(t, m) and census_transfer_check(t, m)
    assert psi_corner_identity_check(t)


@SETTINGS
@given(st.one_of(spheres, windows))
def test_round_trip(t):
    text = serialize(t)
    back = parse(text)
    assert serialize(back) == text
    assert back.rotations == t.rotations


@SETTINGS
@given(spheres, st.data())
def test_patch_interior_definition(t, data):
    f = data.draw(st.integers(0, t.face_count - 1))
    p = as_patch(t, f)
    outer = set(t.face_vertices(f))
    assert p.interior_vertices == frozenset(range(t.vertex_count)) - outer
    for e in p.interior_edges:
        a, b = p.edge_faces(e)
        assert a != b
    assert all(p.outer_face not in p.faces_at(x) for x in p.interior_vertices)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(3, 40), min_size=3, max_size=8))
def test_curvature_formula_by_common_denominator(degrees):
    n = len(degrees)
    den = 2
    for d in degrees:
        den = den * d
    num = den - n * den // 2 + sum(den // d for d in degrees)
    assert curvature_of_pattern(degrees) == Fraction(num, den)


@settings(max_examples=8, deadline=None)
@given(st.integers(12, 26))
def test_pattern_families_stable(k_max):
    table = enumerate_positive_patterns(4, k_max)
    reference = enumerate_positive_patterns(4, 30)
    assert [(f.prefix, f.k_min, f.k_max, f.constant) for f in table.families] == \
        [(f.prefix, f.k_min, f.k_max, f.constant) for f in reference.families]
    assert table.vanishing == [p for p in reference.vanishing if p[-1] <= k_max]


@SETTINGS
@given(st.one_of(st.builds(sharp_big_face, st.integers(8, 12), st.integers(2, 4)),
                 st.builds(glued_sharp_pair, st.integers(8, 12), st.integers(1, 3))))
def test_discharge_conservation_and_locality(t):
    s = discharge(t)
    assert s.conserved
    assert s.total_phi == total_curvature(t)
    for x in s.phi:
        if x not in s.W | s.W1:
            assert s.phi_tilde[x] == s.phi[x] == combinatorial_curvature(t, x)
    if not (s.W & s.W1):
        assert all(s.face_bound_ok(f) for f in s.big_faces)
