"""Global checks: Gauss-Bonnet, total-curvature bound, face-degree bounds,
face counts, and the antiprism dichotomy."""

from __future__ import annotations

from fractions import Fraction

from ..curvature import (classify, combinatorial_curvature, psi_corner_identity_check,
                         total_curvature)
from ..embedding import PATCH, SPHERE, Tessellation, isomorphic
from ..errors import ModeMismatch, TruncatedNeighborhood
from ..operators import census_transfer_check, medial, psi_medial_transfer_check
from .census import census
from .neighborhoods import (BIG_MAX, BIG_MIN, big_face_structure_check, big_faces,
                            disjoint_neighborhoods_check, one_neighborhood,
                            window_preconditions)
from .report import FAIL, PASS, CheckResult, make_result

def gauss_bonnet(t: Tessellation) -> CheckResult:
    if t.mode != SPHERE:
        raise ModeMismatch("Gauss-Bonnet needs a sphere tessellation")
    total = total_curvature(t)
    return make_result("gauss_bonnet", total, violated=total != 2)


def cohn_vossen(t: Tessellation) -> CheckResult:
    """Total curvature of a nonnegatively curved window is at most 1."""
    if t.mode != PATCH:
        raise ModeMismatch("the total-curvature bound applies to patch windows")
    total = total_curvature(t)
    negative = sorted(x for x in t.interior_vertices if combinatorial_curvature(t, x) < 0)
    pre = [f"not NNG: negative curvature at {negative[:8]}"] if negative else []
    violated = total > 1
    return make_result("cohn_vossen", total, violated=violated, preconditions=pre,
                       window=t.mode == PATCH)


def max_face_degree(t: Tessellation) -> CheckResult:
    faces = sorted(t.interior_faces)
    top = max((t.face_degree(f) for f in faces), default=0)
    witnesses = [f for f in faces if t.face_degree(f) > BIG_MAX]
    notes = []
    if witnesses and t.mode == SPHERE and is_antiprism(t):
        notes.append("the graph is an antiprism")
    return make_result("max_face_degree", Fraction(top), violated=bool(witnesses),
                       witnesses=witnesses, preconditions=window_preconditions(t), notes=notes,
                       window=t.mode == PATCH)


def is_antiprism(t: Tessellation) -> bool:
    """Two ``n``-gons joined by a band of ``2n`` triangles, every vertex (3,3,3,n)."""
    from ..generators import antiprism

    if t.mode != SPHERE:
        raise ModeMismatch("antiprism recognition needs a sphere tessellation")
    if t.vertex_count % 2 or t.vertex_count < 6:
        return False
    return isomorphic(t, antiprism(t.vertex_count // 2))


def antiprism_dichotomy(t: Tessellation) -> CheckResult:
    """A 4-regular NNG sphere graph with a face of degree >= 13 is an antiprism."""
    if t.mode != SPHERE:
        raise ModeMismatch("antiprism recognition needs a sphere tessellation")
    top = max(t.face_degree(f) for f in range(t.face_count))
    violated = top > BIG_MAX and not is_antiprism(t)
    notes = []
    if top > BIG_MAX:
        notes.append("antiprism" if not violated else "face of degree >= 13 but not an antiprism")
    return make_result("antiprism_dichotomy", Fraction(top), violated=violated,
                       preconditions=window_preconditions(t), notes=notes)


def face_count_bounds(t: Tessellation) -> list[CheckResult]:
    """``F_5 <= 21``, ``F_7 <= 15`` and ``F_8 + ... + F_12 <= 1``."""
    c = census(t)
    pre = window_preconditions(t)
    out = []
    for name, value, limit, degrees in (
            ("f5_bound", c.F(5), 21, (5,)),
            ("f7_bound", c.F(7), 15, (7,)),
            ("big_face_count", sum(c.F(k) for k in range(BIG_MIN, BIG_MAX + 1)), 1,
             range(BIG_MIN, BIG_MAX + 1))):
        violated = value > limit
        witnesses = sorted(f for f in t.interior_faces if t.face_degree(f) in degrees) \
            if violated else []
        out.append(make_result(name, Fraction(value), violated=violated, witnesses=witnesses,
                               preconditions=pre, window=t.mode == PATCH))
    return out


def big_face_structure(t: Tessellation) -> CheckResult:
    """Structure check on every big face whose neighbourhood lies in the window."""
    results = []
    skipped = []
    for s in big_faces(t):
        try:
            one_neighborhood(t, s)
        except TruncatedNeighborhood:
            skipped.append(s)
            continue
        results.append(big_face_structure_check(t, s))
    witnesses = [w for r in results for w in r.witnesses]
    notes = [f"face {s} skipped: neighbourhood not inside the window" for s in skipped]
    return make_result("big_face_structure", Fraction(len(witnesses)),
                       violated=bool(witnesses), witnesses=witnesses,
                       preconditions=window_preconditions(t), notes=notes)


def _identity(name, ok):
    return CheckResult(name=name, status=PASS if ok else FAIL, violated=not ok)


def run_checks(t: Tessellation) -> list[CheckResult]:
    """Every check applicable to the mode of ``t``."""
    results = []
    if t.mode == SPHERE:
        results.append(gauss_bonnet(t))
        results.append(antiprism_dichotomy(t))
    else:
        results.append(cohn_vossen(t))
    results.append(max_face_degree(t))
    results.extend(face_count_bounds(t))
    results.append(big_face_structure(t))
    results.append(disjoint_neighborhoods_check(t))
    results.append(_identity("psi_corner_identity", psi_corner_identity_check(t)))
    if t.interior_edges:
        m = medial(t)
        results.append(_identity("psi_medial_transfer", psi_medial_transfer_check(t, m)))
        results.append(_identity("census_transfer", census_transfer_check(t, m)))
    flags = classify(t)
    results.append(CheckResult(name="classes", status=PASS, notes=(flags.describe(),)))
    return results
