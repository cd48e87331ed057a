"""Finite windows of periodic planar tilings."""

from __future__ import annotations


from ..embedding import Patch
from ..errors import InvalidParameter
from . import geometry as geo


def square_lattice(w: int, h: int) -> Patch:
    """Grid of ``w`` by ``h`` vertices; the rectangle's outside is the outer face."""
    if w < 2 or h < 2:
        raise InvalidParameter("square lattice needs at least 2x2 vertices")
    coords = [(i, j) for j in range(h) for i in range(w)]
    edges = [(j * w + i, j * w + i + 1) for j in range(h) for i in range(w - 1)]
    edges += [(j * w + i, (j + 1) * w + i) for j in range(h - 1) for i in range(w)]
    return geo.plane_patch(coords, edges)


def _trihex_tiles(n):
    return geo.medial_tiles(geo.triangular_tiles(n))


def trihexagonal(radius: int = 3) -> Patch:
    """Window of the (3,6,3,6) tiling."""
    return geo.tiling_patch(_trihex_tiles, radius)


def rhombitrihexagonal(radius: int = 3) -> Patch:
    """Window of the (3,4,6,4) tiling."""
    return geo.tiling_patch(lambda n: geo.medial_tiles(_trihex_tiles(n)), radius)


def rhombille(radius: int = 3) -> Patch:
    """Window of the rhombille tiling: all faces quadrilaterals, vertex degrees 3 and 6."""
    return geo.tiling_patch(lambda n: geo.dual_tiles(_trihex_tiles(n)), radius)


def tiling_3_12_12(radius: int = 2) -> Patch:
    """Window of the truncated hexagonal (3,12,12) tiling."""
    return geo.tiling_patch(
        lambda n: geo.truncate_tiles(geo.dual_tiles(geo.triangular_tiles(n))), radius)


def hexagonal(radius: int = 3) -> Patch:
    return geo.tiling_patch(lambda n: geo.dual_tiles(geo.triangular_tiles(n)), radius)


def triangular(radius: int = 3) -> Patch:
    return geo.tiling_patch(geo.triangular_tiles, radius)


def prismatic_pentagonal(radius: int = 3) -> Patch:
    """Window of the pentagon tiling dual to the elongated triangular tiling."""
    return geo.tiling_patch(lambda n: geo.dual_tiles(geo.elongated_triangular_tiles(n)), radius)


def heptagon_tiling(radius: int = 3) -> Patch:
    """Tiling with heptagons: dual of the elongated triangular tiling with every square coned."""
    return geo.tiling_patch(
        lambda n: geo.dual_tiles(geo.kis_tiles(geo.elongated_triangular_tiles(n),
                                               lambda t: len(t) == 4)), radius)


