"""Curvature redistribution towards big faces.

Every vertex ``y`` of ``W1`` (the outer rings of the big faces'
1-neighbourhoods) hands ``Phi(y)/2`` to each neighbour in ``W`` (the
big-face boundaries).  Implemented as transfers along edges, so the total
is conserved by construction and the conservation check is independent
arithmetic on the result.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..curvature import combinatorial_curvature
from ..embedding import Tessellation
from ..errors import EmptyDonorSet, EmptyReceiverSet, TruncatedNeighborhood
from .neighborhoods import BIG_MAX, big_faces, one_neighborhood, window_preconditions

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class DischargeState:
    W: frozenset
    W1: frozenset
    phi: dict
    phi_tilde: dict
    big_faces: tuple
    face_boundaries: dict = field(default_factory=dict)
    notes: tuple = ()

    @property
    def total_phi(self) -> Fraction:
        return sum(self.phi.values(), Fraction(0))

    @property
    def total_phi_tilde(self) -> Fraction:
        return sum(self.phi_tilde.values(), Fraction(0))

    @property
    def conserved(self) -> bool:
        return self.total_phi == self.total_phi_tilde

    def face_sum(self, sigma: int) -> Fraction:
        return sum((self.phi_tilde[z] for z in self.face_boundaries[sigma]), Fraction(0))

    def face_bound_ok(self, sigma: int) -> bool:
        """At least 1/2, strictly more for faces of degree below 12."""
        s = self.face_sum(sigma)
        if len(self.face_boundaries[sigma]) < BIG_MAX:
            return s > HALF
        return s >= HALF

    def changed(self) -> set:
        return {x for x in self.phi if self.phi[x] != self.phi_tilde[x]}


def discharge(t: Tessellation) -> DischargeState:
    faces = big_faces(t)
    hoods = [one_neighborhood(t, s) for s in faces]
    W = frozenset().union(*(h.face_boundary for h in hoods))
    W1 = frozenset().union(*(h.boundary for h in hoods))
    phi = {x: combinatorial_curvature(t, x) for x in sorted(t.interior_vertices)}
    tilde = dict(phi)
    for y in sorted(W1):
        share = HALF * phi[y]
        for x in set(t.neighbors(y)):
            if x in W:
                tilde[x] += share
                tilde[y] -= share
    notes = tuple(window_preconditions(t))
    if W & W1:
        notes += (f"vertices in both W and W1: {sorted(W & W1)[:8]}",)
    return DischargeState(W=W, W1=W1, phi=phi, phi_tilde=tilde, big_faces=tuple(faces),
                          face_boundaries={h.face: tuple(t.face_vertices(h.face))
                                           for h in hoods},
                          notes=notes)


@dataclass(frozen=True)
class LocalDischargeState:
    B: frozenset
    sigma1: int
    sigma2: int
    N: int
    receivers: frozenset
    donors: frozenset
    phi: dict
    phi_prime: dict

    @property
    def conserved(self) -> bool:
        before = sum((self.phi[z] for z in self.receivers | self.donors), Fraction(0))
        after = sum((self.phi_prime[z] for z in self.receivers), Fraction(0))
        return before == after


def modified_curvature_B(t: Tessellation, sigma1: int, sigma2: int, B) -> LocalDischargeState:
    """Spread the curvature of ``B`` off the two faces evenly over ``B`` on them."""
    t.check_face(sigma1)
    t.check_face(sigma2)
    B = frozenset(B)
    outside = B - t.interior_vertices
    if outside:
        raise TruncatedNeighborhood(f"vertices {sorted(outside)} are not interior")
    on_faces = set(t.face_vertices(sigma1)) | set(t.face_vertices(sigma2))
    receivers = B & on_faces
    donors = B - on_faces
    if not donors:
        raise EmptyDonorSet("B has no vertex off the two faces")
    if not receivers:
        raise EmptyReceiverSet("B has no vertex on the two faces")
    phi = {z: combinatorial_curvature(t, z) for z in B}
    gain = sum((phi[z] for z in donors), Fraction(0)) / len(receivers)
    return LocalDischargeState(B=B, sigma1=sigma1, sigma2=sigma2, N=len(receivers),
                               receivers=receivers, donors=donors, phi=phi,
                               phi_prime={z: phi[z] + gain for z in receivers})
