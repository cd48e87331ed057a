"""Combinatorial, corner and Psi-curvature in exact rational arithmetic.

Every value is a :class:`fractions.Fraction`.  On patches only interior
elements are evaluated, since a truncated star has no meaningful degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .embedding import Tessellation
from .errors import BoundaryEdge, BoundaryVertex, NotACorner

Rational = Fraction

ONE = Fraction(1)
HALF = Fraction(1, 2)


def fmt(q: Fraction) -> str:
    """Render a rational as ``p/q`` (integers keep their ``/1``)."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def _require_vertex(t: Tessellation, x: int) -> None:
    if x not in t.interior_vertices:
        raise BoundaryVertex(f"vertex {x} is not interior")


def _require_edge(t: Tessellation, e: int) -> None:
    if e not in t.interior_edges:
        raise BoundaryEdge(f"edge {e} is not interior")


def curvature_of_pattern(pattern) -> Fraction:
    """Combinatorial curvature of a vertex whose faces have the given degrees."""
    return 1 - Fraction(len(pattern), 2) + sum((Fraction(1, k) for k in pattern), Fraction(0))


def combinatorial_curvature(t: Tessellation, x: int) -> Fraction:
    """``1 - |x|/2 + sum(1/|sigma|)`` over the faces at ``x``."""
    _require_vertex(t, x)
    phi = 1 - Fraction(t.degree(x), 2)
    for f in t.faces_at(x):
        phi += Fraction(1, t.face_degree(f))
    return phi


def corner_curvature(t: Tessellation, x: int, face: int) -> Fraction:
    t.check_face(face)
    if face not in t.faces_at(x):
        raise NotACorner(f"vertex {x} is not on face {face}")
    _require_vertex(t, x)
    return Fraction(1, t.degree(x)) + Fraction(1, t.face_degree(face)) - HALF


def psi_curvature(t: Tessellation, e: int) -> Fraction:
    """``1/|x1| + 1/|x2| + 1/|s1| + 1/|s2| - 1`` for edge ``e``."""
    _require_edge(t, e)
    u, v = t.edge_ends(e)
    f1, f2 = t.edge_faces(e)
    return (Fraction(1, t.degree(u)) + Fraction(1, t.degree(v))
            + Fraction(1, t.face_degree(f1)) + Fraction(1, t.face_degree(f2)) - 1)


def vertex_pattern(t: Tessellation, x: int) -> tuple[int, ...]:
    _require_vertex(t, x)
    return tuple(sorted(t.face_degree(f) for f in t.faces_at(x)))


def total_curvature(t: Tessellation) -> Fraction:
    """Sum of combinatorial curvature over (interior) vertices."""
    return sum((combinatorial_curvature(t, x) for x in t.interior_vertices), Fraction(0))


def psi_from_corners(t: Tessellation, e: int) -> Fraction:
    """Half the sum of the four corner curvatures around edge ``e``."""
    u, v = t.edge_ends(e)
    f1, f2 = t.edge_faces(e)
    return HALF * (corner_curvature(t, u, f1) + corner_curvature(t, u, f2)
                   + corner_curvature(t, v, f1) + corner_curvature(t, v, f2))


def psi_corner_identity_check(t: Tessellation) -> bool:
    """Psi equals half the sum of the four incident corner curvatures on every interior edge."""
    return all(psi_curvature(t, e) == psi_from_corners(t, e) for e in t.interior_edges)


def interior_corners(t: Tessellation):
    for x in sorted(t.interior_vertices):
        for f in sorted(set(t.faces_at(x))):
            yield x, f


@dataclass(frozen=True)
class ClassFlags:
    in_NNG: bool
    in_CC: bool
    in_MM: bool
    window: bool = False

    def __post_init__(self):
        if self.in_CC and not (self.in_NNG and self.in_MM):
            raise AssertionError("CC membership must imply NNG and MM")

    def describe(self) -> str:
        names = [n for n, ok in (("NNG", self.in_NNG), ("CC", self.in_CC),
                                 ("MM", self.in_MM)) if ok]
        body = ", ".join(names) if names else "none of NNG, CC, MM"
        if self.window:
            return f"consistent with membership on the visible window: {body}"
        return f"member of: {body}"


def classify(t: Tessellation) -> ClassFlags:
    nng = all(combinatorial_curvature(t, x) >= 0 for x in t.interior_vertices)
    cc = all(corner_curvature(t, x, f) >= 0 for x, f in interior_corners(t))
    mm = all(psi_curvature(t, e) >= 0 for e in t.interior_edges)
    return ClassFlags(in_NNG=nng, in_CC=cc, in_MM=mm, window=t.mode != "sphere")
