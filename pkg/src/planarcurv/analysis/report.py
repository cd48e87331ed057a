"""Uniform result record for every checker."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..curvature import fmt

PASS = "pass"
FAIL = "fail"
PRECONDITION_FAILED = "precondition-failed"


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one check.

    ``violated`` records whether the checked statement fails on this input,
    independently of ``status``: a check whose hypotheses do not hold is
    reported as ``precondition-failed`` but still lists what it found.
    """

    name: str
    status: str
    value: Fraction | None = None
    witnesses: tuple = ()
    notes: tuple = ()
    violated: bool = False

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "value": None if self.value is None else fmt(self.value),
            "witnesses": list(self.witnesses),
            "notes": list(self.notes),
        }


WINDOW_NOTE = "satisfied on this window only; a window does not certify the infinite graph"


def make_result(name, value, violated, witnesses=(), preconditions=(), notes=(), window=False):
    if preconditions:
        status = PRECONDITION_FAILED
    else:
        status = FAIL if violated else PASS
    notes = list(preconditions) + list(notes)
    if preconditions and violated:
        notes.append("statement violated on this input")
    if window and status == PASS:
        notes.append(WINDOW_NOTE)
    return CheckResult(name=name, status=status, value=value, witnesses=tuple(witnesses),
                       notes=tuple(notes), violated=violated)
