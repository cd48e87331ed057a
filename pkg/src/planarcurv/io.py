"""The ``planar v1`` text format and JSON reports.

A document is a header line, a mode line, one line per vertex with its
neighbours in counterclockwise order, and for patches a dart on the outer
face::

    planar v1
    mode: patch
    v0: 1 3
    ...
    outer: 0 1

``#`` comments and blank lines are ignored.  :func:`serialize` is the
exact inverse of :func:`parse` on its own output.
"""

from __future__ import annotations

import json
import re

from .embedding import PATCH, SPHERE, Tessellation, build_from_rotation_system
from .errors import PlanarSyntaxError

HEADER = "planar v1"
_VERTEX = re.compile(r"^v(\d+)\s*:(.*)$")
_ID = re.compile(r"^v?(\d+)$")


def _ids(text, lineno):
    out = []
    for tok in text.split():
        m = _ID.match(tok)
        if not m:
            raise PlanarSyntaxError(lineno, f"bad vertex id {tok!r}")
        out.append(int(m.group(1)))
    return out


def parse(text: str) -> Tessellation:
    lines = [(i, raw.split("#", 1)[0].strip()) for i, raw in enumerate(text.splitlines(), 1)]
    lines = [(i, s) for i, s in lines if s]
    if not lines or lines[0][1] != HEADER:
        raise PlanarSyntaxError(lines[0][0] if lines else 1, f"expected header {HEADER!r}")
    mode = None
    outer = None
    rows = {}
    for lineno, s in lines[1:]:
        if s.startswith("mode:"):
            if mode is not None:
                raise PlanarSyntaxError(lineno, "duplicate mode line")
            mode = s[5:].strip()
            if mode not in (SPHERE, PATCH):
                raise PlanarSyntaxError(lineno, f"unknown mode {mode!r}")
        elif s.startswith("outer:"):
            if outer is not None:
                raise PlanarSyntaxError(lineno, "duplicate outer line")
            ends = _ids(s[6:], lineno)
            if len(ends) != 2:
                raise PlanarSyntaxError(lineno, "outer needs exactly two vertex ids")
            outer = (tuple(ends), lineno)
        else:
            m = _VERTEX.match(s)
            if not m:
                raise PlanarSyntaxError(lineno, f"unrecognised line {s!r}")
            v = int(m.group(1))
            if v in rows:
                raise PlanarSyntaxError(lineno, f"vertex v{v} listed twice")
            rows[v] = (_ids(m.group(2), lineno), lineno)
    if mode is None:
        raise PlanarSyntaxError(lines[-1][0], "missing mode line")
    if not rows:
        raise PlanarSyntaxError(lines[-1][0], "no vertices")
    n = len(rows)
    missing = sorted(set(range(n)) - set(rows))
    if missing:
        raise PlanarSyntaxError(lines[-1][0], f"vertex ids must be 0..{n - 1}; v{missing[0]} missing")
    if mode == PATCH and outer is None:
        raise PlanarSyntaxError(lines[-1][0], "patch document needs an 'outer: u v' line")
    if mode == SPHERE and outer is not None:
        raise PlanarSyntaxError(outer[1], "outer line is only allowed in patch mode")
    rotations = [rows[v][0] for v in range(n)]
    return build_from_rotation_system(rotations, mode,
                                      outer_hint=outer[0] if outer else None)


def serialize(t: Tessellation) -> str:
    out = [HEADER, f"mode: {t.mode}"]
    for v, nbrs in enumerate(t.rotations):
        out.append(f"v{v}: " + " ".join(map(str, nbrs)))
    if t.mode == PATCH:
        d = t.faces[t.outer_face][0]
        out.append(f"outer: {t.map.origin[d]} {t.map.target(d)}")
    return "\n".join(out) + "\n"


def read_file(path) -> Tessellation:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def write_file(t: Tessellation, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(t))


def report_dict(graph_id: str, results) -> dict:
    return {"graph_id": graph_id, "checks": [r.to_json() for r in results]}


def report_json(graph_id: str, results) -> str:
    return json.dumps(report_dict(graph_id, results), indent=2, sort_keys=False)
