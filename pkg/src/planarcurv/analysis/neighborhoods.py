"""1-neighbourhoods of faces and the structural checks around big faces."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from ..curvature import combinatorial_curvature
from ..embedding import Tessellation, sigma_adjacent
from ..errors import InvalidParameter, TruncatedNeighborhood
from .report import CheckResult, make_result

BIG_MIN, BIG_MAX = 8, 12


@dataclass(frozen=True)
class NeighborhoodSet:
    """``U1`` is the face boundary plus all neighbours of it; ``boundary`` is ``U1`` minus the face boundary."""

    face: int
    U1: frozenset
    boundary: frozenset
    face_boundary: frozenset

    def __post_init__(self):
        if not self.face_boundary <= self.U1 or self.boundary & self.face_boundary:
            raise ValueError("inconsistent neighbourhood")


def one_neighborhood(t: Tessellation, sigma: int) -> NeighborhoodSet:
    t.check_face(sigma)
    if sigma == t.outer_face:
        raise TruncatedNeighborhood("the outer face has no neighbourhood")
    ring = frozenset(t.face_vertices(sigma))
    u1 = set(ring)
    for z in ring:
        u1.update(t.neighbors(z))
    u1 = frozenset(u1)
    outside = u1 - t.interior_vertices
    if outside:
        raise TruncatedNeighborhood(
            f"neighbourhood of face {sigma} reaches the outer face at {sorted(outside)}")
    return NeighborhoodSet(face=sigma, U1=u1, boundary=u1 - ring, face_boundary=ring)


def is_big(t: Tessellation, sigma: int) -> bool:
    return BIG_MIN <= t.face_degree(sigma) <= BIG_MAX


def big_faces(t: Tessellation):
    """Interior faces with degree in 8..12."""
    return sorted(s for s in t.interior_faces if is_big(t, s))


def window_preconditions(t: Tessellation) -> list[str]:
    """Reasons why ``t`` is not a 4-regular window with nonnegative curvature."""
    notes = []
    bad_deg = sorted(x for x in t.interior_vertices if t.degree(x) != 4)
    if bad_deg:
        notes.append(f"not 4-regular: interior vertices of degree != 4: {bad_deg[:8]}")
    negative = sorted(x for x in t.interior_vertices if combinatorial_curvature(t, x) < 0)
    if negative:
        notes.append(f"not NNG: negative curvature at {negative[:8]}")
    return notes


def lower_adjacent_to(t: Tessellation, sigma: int) -> list[int]:
    """Faces sharing an edge with ``sigma``, in order around it."""
    seen = []
    for d in t.faces[sigma]:
        f = t.face_of[d ^ 1]
        if f not in seen:
            seen.append(f)
    return seen


def big_face_structure_check(t: Tessellation, sigma: int) -> CheckResult:
    """Faces around a big face: only triangles and squares, squares pairwise not
    ``sigma``-adjacent, and no two faces sharing a vertex off ``sigma``."""
    t.check_face(sigma)
    if not is_big(t, sigma):
        raise InvalidParameter(f"face {sigma} has degree {t.face_degree(sigma)}, not in 8..12")
    one_neighborhood(t, sigma)
    ring = set(t.face_vertices(sigma))
    around = lower_adjacent_to(t, sigma)
    witnesses = []
    for f in around:
        if t.face_degree(f) not in (3, 4):
            witnesses.append({"rule": "degree", "face": f, "degree": t.face_degree(f)})
    squares = [f for f in around if t.face_degree(f) == 4]
    for a, b in combinations(squares, 2):
        if sigma_adjacent(t, sigma, a, b):
            witnesses.append({"rule": "adjacent-squares", "faces": [a, b]})
    off = {f: set(t.face_vertices(f)) - ring for f in around}
    for a, b in combinations(around, 2):
        shared = off[a] & off[b]
        if shared:
            witnesses.append({"rule": "identified", "faces": [a, b],
                              "vertices": sorted(shared)})
    return make_result(f"big_face_structure[{sigma}]", Fraction(len(witnesses)),
                       violated=bool(witnesses), witnesses=witnesses,
                       preconditions=window_preconditions(t))


def disjoint_neighborhoods_check(t: Tessellation) -> CheckResult:
    """1-neighbourhoods of distinct big faces must not meet."""
    notes = []
    hoods = []
    for s in big_faces(t):
        try:
            hoods.append(one_neighborhood(t, s))
        except TruncatedNeighborhood:
            notes.append(f"face {s} skipped: neighbourhood not inside the window")
    witnesses = []
    for a, b in combinations(hoods, 2):
        shared = a.U1 & b.U1
        if shared:
            witnesses.append({"faces": [a.face, b.face], "vertices": sorted(shared)})
    return make_result("disjoint_neighborhoods", Fraction(len(witnesses)),
                       violated=bool(witnesses), witnesses=witnesses,
                       preconditions=window_preconditions(t), notes=notes)
