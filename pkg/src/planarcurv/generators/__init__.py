"""Deterministic builders for every example graph.

:func:`generate` dispatches on a :class:`GeneratorSpec`; the individual
builders are importable directly as well.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import InvalidParameter
from .polyhedra import (PLATONIC, antiprism, cube, dodecahedron, icosahedron, octahedron,
                        pentagon_barrel, platonic, prism, tetrahedron, truncate,
                        truncated_cube)
from .sharp import glued_sharp_pair, sharp_big_face
from .tilings import (heptagon_tiling, hexagonal, prismatic_pentagonal, rhombille,
                      rhombitrihexagonal, square_lattice, tiling_3_12_12, triangular,
                      trihexagonal)

BUILDERS = {
    "platonic": platonic,
    "prism": prism,
    "antiprism": antiprism,
    "truncated_cube": truncated_cube,
    "square_lattice": square_lattice,
    "trihexagonal": trihexagonal,
    "rhombitrihexagonal": rhombitrihexagonal,
    "rhombille": rhombille,
    "tiling_3_12_12": tiling_3_12_12,
    "sharp_big_face": sharp_big_face,
    "glued_sharp_pair": glued_sharp_pair,
    "pentagon_barrel": pentagon_barrel,
    "hexagonal": hexagonal,
    "triangular": triangular,
    "prismatic_pentagonal": prismatic_pentagonal,
    "heptagon_tiling": heptagon_tiling,
}


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    params: tuple = ()

    def __str__(self):
        return "(".join([self.kind, ",".join(map(str, self.params)) + ")"]) if self.params \
            else self.kind


def generate(spec: GeneratorSpec):
    try:
        builder = BUILDERS[spec.kind]
    except KeyError:
        raise InvalidParameter(f"unknown generator {spec.kind!r}") from None
    try:
        return builder(*spec.params)
    except TypeError as exc:
        raise InvalidParameter(f"{spec.kind}: {exc}") from None


__all__ = [
    "BUILDERS", "GeneratorSpec", "PLATONIC", "antiprism", "cube", "dodecahedron", "generate",
    "glued_sharp_pair", "heptagon_tiling", "hexagonal", "icosahedron", "octahedron",
    "pentagon_barrel", "platonic", "prism", "prismatic_pentagonal", "rhombille",
    "rhombitrihexagonal", "sharp_big_face", "square_lattice", "tetrahedron",
    "tiling_3_12_12", "triangular", "trihexagonal", "truncate", "truncated_cube",
]
