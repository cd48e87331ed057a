"""Hand-built inputs that break one condition or one bound each."""

from planarcurv.embedding import as_patch, build_from_faces, build_from_rotation_system
from planarcurv.generators import antiprism, dodecahedron, glued_sharp_pair, pentagon_barrel, prism


def doubled_triangle():
    """Two triangles on 0,1,2 glued along 0-1 and 1-2: the edge 0-2 is doubled."""
    return build_from_rotation_system([[1, 2, 2], [0, 2], [0, 1, 0]], strict=False)


def squares_meeting_at_opposite_corners():
    """Four squares a-x-c-y around two poles; non-consecutive squares meet only in the poles."""
    a, c, b, e, d, f = range(6)
    return build_from_faces([(a, b, c, e), (a, e, c, d), (a, d, c, f), (a, f, c, b)])


def apex_identification():
    """Octagon z0..z7 where the triangles on z0z1 and z4z5 share their apex x."""
    z = list(range(8))
    x, p, q = 8, 9, 10
    faces = [tuple(reversed(z)),
             (z[0], z[1], x), (z[1], z[2], p, x), (z[2], z[3], p), (z[3], z[4], x, p),
             (z[4], z[5], x), (z[5], z[6], q, x), (z[6], z[7], q), (z[7], z[0], x, q)]
    return build_from_faces(faces)


def pentagon_at_big_face():
    """Two 9-gons each ringed by pentagons."""
    return pentagon_barrel(9)


def squares_round_big_face():
    """Octagonal prism: every pair of consecutive squares is adjacent along the octagon."""
    return prism(8)


def two_octagons():
    """Antiprism(8): two octagons whose neighbourhoods cover everything."""
    return antiprism(8)


def overlapping_sharp_pair():
    """Two big 12-gons one ring apart: 4-regular, nonnegative, overlapping neighbourhoods."""
    return glued_sharp_pair(12, 1)


def big_antiprism(n=13):
    return antiprism(n)


def dodecahedron_window():
    """Dodecahedron minus one face: fifteen interior vertices of curvature 1/10."""
    return as_patch(dodecahedron(), 0)
