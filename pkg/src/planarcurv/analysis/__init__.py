"""Censuses, pattern tables, neighbourhood checks, theorem checkers and discharging."""

from .census import Census, census
from .checkers import (antiprism_dichotomy, big_face_structure, cohn_vossen, face_count_bounds,
                       gauss_bonnet, is_antiprism, max_face_degree, run_checks)
from .discharge import DischargeState, LocalDischargeState, discharge, modified_curvature_B
from .neighborhoods import (NeighborhoodSet, big_face_structure_check, big_faces,
                            disjoint_neighborhoods_check, lower_adjacent_to, one_neighborhood,
                            window_preconditions)
from .patterns import PatternFamily, PatternTable, enumerate_positive_patterns
from .report import FAIL, PASS, PRECONDITION_FAILED, CheckResult

__all__ = [
    "Census", "CheckResult", "DischargeState", "FAIL", "LocalDischargeState", "NeighborhoodSet",
    "PASS", "PRECONDITION_FAILED", "PatternFamily", "PatternTable", "antiprism_dichotomy",
    "big_face_structure", "big_face_structure_check", "big_faces", "census", "cohn_vossen",
    "discharge", "disjoint_neighborhoods_check", "enumerate_positive_patterns",
    "face_count_bounds", "gauss_bonnet", "is_antiprism", "lower_adjacent_to",
    "max_face_degree", "modified_curvature_B", "one_neighborhood", "run_checks",
    "window_preconditions",
]
