"""Planar dual and medial graph, with the transfer identities they satisfy."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .curvature import combinatorial_curvature, psi_curvature
from .embedding import PATCH, SPHERE, Tessellation, build_from_rotation_system
from .errors import EmptyInterior, PatchModeUnsupported


@dataclass(frozen=True)
class DualMapping:
    dual: Tessellation
    face_to_vertex: dict
    vertex_to_face: dict
    edge_to_edge: dict


@dataclass(frozen=True)
class MedialMapping:
    medial: Tessellation
    edge_to_vertex: dict
    vertex_to_face: dict
    face_to_face: dict


def dual(t: Tessellation) -> DualMapping:
    """Dual of a sphere tessellation.

    Dual vertex ``f`` is face ``f``; its rotation runs against the face's
    dart cycle so that the dual is again counterclockwise.
    """
    if t.mode != SPHERE:
        raise PatchModeUnsupported("the dual needs the whole sphere graph")
    rotations = []
    for cycle in t.faces:
        rotations.append([t.face_of[d ^ 1] for d in reversed(cycle)])
    g = build_from_rotation_system(rotations, SPHERE)
    edge_map = {}
    for e in range(t.edge_count):
        a, b = t.edge_faces(e)
        edge_map[e] = g.map.dart(a, b) >> 1
    by_faces = {frozenset(g.face_vertices(f)): f for f in range(g.face_count)}
    vertex_to_face = {x: by_faces[frozenset(t.faces_at(x))] for x in range(t.vertex_count)}
    return DualMapping(dual=g, face_to_vertex={f: f for f in range(t.face_count)},
                       vertex_to_face=vertex_to_face, edge_to_edge=edge_map)


def medial(t: Tessellation) -> MedialMapping:
    """Medial graph: one vertex per edge, one edge per corner.

    On a patch the corners of the outer face are dropped; the medial faces
    of boundary vertices then merge into one fresh outer face, and the
    interior of the medial patch is exactly the set of midpoints of
    interior edges.
    """
    if t.mode == PATCH and not t.interior_edges:
        raise EmptyInterior("patch has no interior edge")
    cmap = t.map
    outer = t.outer_face

    def keep(d):
        return t.face_of[d] != outer

    rotations = []
    for e in range(t.edge_count):
        d, dt = 2 * e, 2 * e + 1
        # counterclockwise around m(e): sigma2 side then sigma1 side
        around = []
        p2 = cmap.face_prev(dt)
        s2 = cmap.face_next(dt)
        p1 = cmap.face_prev(d)
        s1 = cmap.face_next(d)
        if keep(dt):
            around += [p2 >> 1, s2 >> 1]
        if keep(d):
            around += [p1 >> 1, s1 >> 1]
        rotations.append(around)
    if t.mode == PATCH:
        # any dart on an outer-face edge of the medial: m(e) -> m(e') for a
        # kept corner adjacent to the outer face
        hint = None
        for d in t.faces[outer]:
            inner = d ^ 1
            if keep(inner):
                e = d >> 1
                hint = (e, cmap.face_next(inner) >> 1)
                break
        g = build_from_rotation_system(rotations, PATCH, outer_hint=hint)
        # the outer face must be the one containing no complete star
        hint_face = g.outer_face
        if _medial_face_key(g, hint_face) in _star_keys(t):
            g = build_from_rotation_system(rotations, PATCH, outer_hint=(hint[1], hint[0]))
    else:
        g = build_from_rotation_system(rotations, SPHERE)

    by_key = {_medial_face_key(g, f): f for f in g.inner_faces()}
    vertex_to_face = {}
    for x in t.interior_vertices:
        key = frozenset(d >> 1 for d in cmap.vertex_darts[x])
        vertex_to_face[x] = by_key[key]
    face_to_face = {}
    for f in t.inner_faces():
        face_to_face[f] = by_key[frozenset(t.face_edges(f))]
    return MedialMapping(medial=g, edge_to_vertex={e: e for e in range(t.edge_count)},
                         vertex_to_face=vertex_to_face, face_to_face=face_to_face)


def _medial_face_key(g: Tessellation, f: int) -> frozenset:
    return frozenset(g.face_vertices(f))


def _star_keys(t: Tessellation) -> set:
    keys = {frozenset(d >> 1 for d in t.map.vertex_darts[x]) for x in t.interior_vertices}
    keys |= {frozenset(t.face_edges(f)) for f in t.inner_faces()}
    return keys


def psi_medial_transfer_check(t: Tessellation, m: MedialMapping | None = None) -> bool:
    """Psi of every interior edge equals the curvature at its medial vertex."""
    m = m or medial(t)
    g = m.medial
    return all(psi_curvature(t, e) == combinatorial_curvature(g, m.edge_to_vertex[e])
               for e in t.interior_edges)


def transfer_census(t: Tessellation, m: MedialMapping | None = None):
    """Both sides of ``V_k + F_k = F_k(medial)`` on the compared region.

    The compared region is the interior vertices and non-outer faces of
    ``t`` against the non-outer faces of its medial (everything on a sphere).
    """
    m = m or medial(t)
    g = m.medial
    lhs = Counter(t.degree(x) for x in t.interior_vertices)
    lhs.update(t.face_degree(f) for f in t.inner_faces())
    rhs = Counter(g.face_degree(f) for f in g.inner_faces())
    return dict(lhs), dict(rhs)


def census_transfer_check(t: Tessellation, m: MedialMapping | None = None) -> bool:
    lhs, rhs = transfer_census(t, m)
    return lhs == rhs
