"""Brute-force enumeration of vertex patterns with nonnegative curvature.

Patterns of a fixed vertex degree are grouped by all but their largest
entry.  Within such a group the curvature is ``1/k + c`` for a constant
``c``, so a whole group is one family with a closed form.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from ..curvature import curvature_of_pattern
from ..errors import InvalidParameter


@dataclass(frozen=True)
class PatternFamily:
    """Patterns ``prefix + (k,)`` for ``k_min <= k <= k_max`` (``k_max`` None: unbounded)."""

    prefix: tuple
    k_min: int
    k_max: int | None
    constant: Fraction

    @property
    def bounded(self) -> bool:
        return self.k_max is not None

    @property
    def formula(self) -> str:
        c = self.constant
        if c == 0:
            return "1/k"
        sign = "+" if c > 0 else "-"
        return f"1/k {sign} {abs(c)}"

    @property
    def k_range(self) -> str:
        if self.k_max is None:
            return f"k >= {self.k_min}"
        return f"{self.k_min} <= k <= {self.k_max}"

    def value(self, k: int) -> Fraction:
        return Fraction(1, k) + self.constant

    def pattern(self, k: int) -> tuple:
        return self.prefix + (k,)

    def __contains__(self, pattern) -> bool:
        pattern = tuple(pattern)
        if pattern[:-1] != self.prefix:
            return False
        k = pattern[-1]
        return k >= self.k_min and (self.k_max is None or k <= self.k_max)

    def label(self) -> str:
        return "(" + ",".join(map(str, self.prefix)) + ",k)"


class PatternTable(NamedTuple):
    families: list
    vanishing: list


def _family(prefix, degree) -> PatternFamily:
    c = 1 - Fraction(degree, 2) + sum((Fraction(1, p) for p in prefix), Fraction(0))
    if c >= 0:
        return PatternFamily(prefix, prefix[-1], None, c)
    # largest k with 1/k > -c
    hi = math.ceil(1 / -c) - 1
    return PatternFamily(prefix, prefix[-1], hi, c)


def enumerate_positive_patterns(vertex_degree: int = 4, k_max: int = 30) -> PatternTable:
    """Families of patterns with positive curvature, and the vanishing patterns.

    Every nondecreasing tuple with entries in ``3..k_max`` is evaluated
    exactly; positive tuples are grouped into families whose closed form
    and range are checked against every enumerated member.
    """
    if not isinstance(vertex_degree, int) or vertex_degree < 3:
        raise InvalidParameter("vertex degree must be an integer >= 3")
    if not isinstance(k_max, int) or k_max < 12:
        raise InvalidParameter("k_max must be an integer >= 12")
    positive: dict[tuple, list[int]] = {}
    vanishing = []
    for pattern in itertools.combinations_with_replacement(range(3, k_max + 1), vertex_degree):
        phi = curvature_of_pattern(pattern)
        if phi > 0:
            positive.setdefault(pattern[:-1], []).append(pattern[-1])
        elif phi == 0:
            vanishing.append(pattern)
    families = []
    for prefix in sorted(positive):
        fam = _family(prefix, vertex_degree)
        ks = positive[prefix]
        expected_hi = k_max if fam.k_max is None else min(fam.k_max, k_max)
        if ks != list(range(fam.k_min, expected_hi + 1)):
            raise AssertionError(f"family {fam.label()} does not match its members")
        for k in ks:
            if curvature_of_pattern(fam.pattern(k)) != fam.value(k):
                raise AssertionError(f"closed form fails for {fam.pattern(k)}")
        families.append(fam)
    return PatternTable(families=families, vanishing=vanishing)
