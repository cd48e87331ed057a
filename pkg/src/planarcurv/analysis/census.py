"""Vertex- and face-degree counts."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from ..embedding import Tessellation


@dataclass(frozen=True)
class Census:
    """``V_k`` and ``F_k`` counts (interior elements only on a patch)."""

    V_k: dict = field(default_factory=dict)
    F_k: dict = field(default_factory=dict)

    def __post_init__(self):
        if any(c < 0 for c in (*self.V_k.values(), *self.F_k.values())):
            raise ValueError("census counts must be nonnegative")

    def V(self, k: int) -> int:
        return self.V_k.get(k, 0)

    def F(self, k: int) -> int:
        return self.F_k.get(k, 0)

    @property
    def vertex_total(self) -> int:
        return sum(self.V_k.values())

    @property
    def face_total(self) -> int:
        return sum(self.F_k.values())

    def degrees(self):
        return sorted(set(self.V_k) | set(self.F_k))

    def rows(self):
        """``(k, V_k, F_k)`` for every degree that occurs."""
        return [(k, self.V(k), self.F(k)) for k in self.degrees()]


def census(t: Tessellation) -> Census:
    v = Counter(t.degree(x) for x in t.interior_vertices)
    f = Counter(t.face_degree(s) for s in t.interior_faces)
    return Census(V_k=dict(sorted(v.items())), F_k=dict(sorted(f.items())))
