"""Combinatorial curvature of planar tessellations in exact arithmetic."""

from ._kernels import BACKEND
from .curvature import (ClassFlags, Rational, classify, combinatorial_curvature,
                        corner_curvature, psi_corner_identity_check, psi_curvature,
                        total_curvature, vertex_pattern)
from .embedding import (PATCH, SPHERE, CombinatorialMap, Patch, Tessellation, as_patch,
                        build_from_faces, build_from_rotation_system, face_boundary, isomorphic,
                        lower_adjacent_faces, sigma_adjacent, sigma_neighbours,
                        validate_tessellation)
from .io import parse, serialize
from .operators import (DualMapping, MedialMapping, census_transfer_check, dual, medial,
                        psi_medial_transfer_check)

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "ClassFlags", "CombinatorialMap", "DualMapping", "MedialMapping", "PATCH",
    "Patch", "Rational", "SPHERE", "Tessellation", "as_patch", "build_from_faces",
    "build_from_rotation_system", "census_transfer_check", "classify",
    "combinatorial_curvature", "corner_curvature", "dual", "face_boundary", "isomorphic",
    "lower_adjacent_faces", "medial", "parse", "psi_corner_identity_check", "psi_curvature",
    "psi_medial_transfer_check", "serialize", "sigma_adjacent", "sigma_neighbours",
    "total_curvature", "validate_tessellation", "vertex_pattern",
]
