"""Concentric-ring constructions around one or two big faces.

Ring 0 is the big ``k``-gon.  Every later ring has ``k`` vertices; a vertex
of ring ``r >= 1`` is joined to two consecutive vertices of ring ``r - 1``
(offset by half a step on odd rings), so consecutive rings are separated by
triangles next to the big face and by quadrilaterals everywhere else.
"""

from __future__ import annotations

import math

from ..embedding import Patch, Tessellation
from ..errors import InvalidParameter
from . import geometry as geo


def _rings(k, last):
    coords = []
    for r in range(last + 1):
        h = 0.5 if r % 2 else 0.0
        for j in range(k):
            a = 2 * math.pi * (j + h) / k
            coords.append(((1 + r) * math.cos(a), (1 + r) * math.sin(a)))
    edges = [(j, (j + 1) % k) for j in range(k)]
    for r in range(1, last + 1):
        for j in range(k):
            v = r * k + j
            if r % 2:
                edges += [(v, (r - 1) * k + j), (v, (r - 1) * k + (j + 1) % k)]
            else:
                edges += [(v, (r - 1) * k + (j - 1) % k), (v, (r - 1) * k + j)]
    return coords, edges


def _check_k(k):
    if not isinstance(k, int) or not 8 <= k <= 12:
        raise InvalidParameter(f"big face degree must be in 8..12, got {k!r}")


def sharp_big_face(k: int = 12, layers: int = 3) -> Patch:
    """One big ``k``-gon with all other interior curvature pushed to its apex ring.

    Boundary vertices of the big face have pattern (3,3,4,k), the apexes of
    the surrounding triangles (3,4,4,4), everything further out (4,4,4,4).
    ``layers`` counts the rings of interior vertices around the big face.
    """
    _check_k(k)
    if not isinstance(layers, int) or layers < 2:
        raise InvalidParameter("layers must be an integer >= 2")
    coords, edges = _rings(k, layers + 2)
    return geo.plane_patch(coords, edges)


def glued_sharp_pair(k: int = 12, gap: int = 2) -> Tessellation:
    """Sphere with two big ``k``-gons, ``gap`` rings of degree-4 vertices between them.

    Drawn with the second big face as the unbounded face.  For ``gap >= 2``
    the 1-neighbourhoods of the two big faces are disjoint.
    """
    _check_k(k)
    if not isinstance(gap, int) or gap < 1:
        raise InvalidParameter("gap must be an integer >= 1")
    coords, edges = _rings(k, gap + 1)
    last = (gap + 1) * k
    edges += [(last + j, last + (j + 1) % k) for j in range(k)]
    return geo.plane_sphere(coords, edges)
