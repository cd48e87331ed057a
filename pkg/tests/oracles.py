"""Naive reference implementations used to cross-check the library.

These work on plain vertex-level data (neighbour lists, vertex tuples)
and share no code with planarcurv beyond the input rotations.
"""

from collections import Counter
from fractions import Fraction


def trace_faces(rotations):
    """Faces as vertex cycles, by the rule: after u -> v go to v -> w with w
    following u in the rotation at v."""
    unused = {(u, v) for u, nbrs in enumerate(rotations) for v in nbrs}
    faces = []
    while unused:
        start = min(unused)
        cycle = []
        u, v = start
        while (u, v) in unused:
            unused.discard((u, v))
            cycle.append(u)
            rot = list(rotations[v])
            w = rot[(rot.index(u) + 1) % len(rot)]
            u, v = v, w
        faces.append(tuple(cycle))
    return faces


def canonical_cycle(cycle):
    """Rotation of the cycle starting at its smallest vertex."""
    i = cycle.index(min(cycle))
    return tuple(cycle[i:] + cycle[:i])


def face_multiset(rotations):
    return Counter(canonical_cycle(list(c)) for c in trace_faces(rotations))


def outer_cycle(rotations, u, v):
    for c in trace_faces(rotations):
        n = len(c)
        if any(c[i] == u and c[(i + 1) % n] == v for i in range(n)):
            return c
    raise LookupError((u, v))


def interior(rotations, outer):
    """Interior vertices and faces for a patch whose outer face is the cycle ``outer``."""
    bad = set(outer)
    verts = {v for v in range(len(rotations)) if v not in bad}
    faces = [c for c in trace_faces(rotations) if canonical_cycle(list(c))
             != canonical_cycle(list(outer)) and all(x in verts for x in c)]
    return verts, faces


def census(rotations, outer=None):
    if outer is None:
        verts, faces = set(range(len(rotations))), trace_faces(rotations)
    else:
        verts, faces = interior(rotations, outer)
    return (dict(Counter(len(rotations[v]) for v in verts)),
            dict(Counter(len(c) for c in faces)))


def one_neighborhood(rotations, face_cycle):
    """Two passes over the edge list: collect the boundary, then every edge touching it."""
    edges = {(u, v) for u, nbrs in enumerate(rotations) for v in nbrs}
    ring = set(face_cycle)
    u1 = set(ring)
    for u, v in edges:
        if u in ring:
            u1.add(v)
    return u1, u1 - ring


def vertex_curvature(rotations, v):
    faces = trace_faces(rotations)
    phi = 1 - Fraction(len(rotations[v]), 2)
    for c in faces:
        phi += Fraction(c.count(v), len(c))
    return phi
