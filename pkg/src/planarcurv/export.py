"""DOT text and SVG drawings with a Tutte barycentric layout."""

from __future__ import annotations

import math
import warnings
from collections import deque
from xml.sax.saxutils import escape

import numpy as np
from scipy.sparse import lil_matrix
from scipy.sparse.linalg import spsolve

from .curvature import combinatorial_curvature, fmt
from .embedding import Tessellation
from .errors import LayoutSingular

RESIDUAL_TOL = 1e-9


def export_dot(t: Tessellation, name: str = "G") -> str:
    lines = [f"graph {name} {{", f'  // mode {t.mode}, V={t.vertex_count} '
             f"E={t.edge_count} F={t.face_count}"]
    for v in range(t.vertex_count):
        attrs = f'label="{v}"'
        if v in t.interior_vertices:
            attrs += f', curvature="{fmt(combinatorial_curvature(t, v))}"'
        lines.append(f"  {v} [{attrs}];")
    for u, v in t.map.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _pinned_face(t: Tessellation) -> int:
    if t.outer_face is not None:
        return t.outer_face
    return max(range(t.face_count), key=lambda f: (t.face_degree(f), -f))


def _reachable_without(t, pinned):
    seen = set(pinned)
    todo = deque(pinned)
    while todo:
        v = todo.popleft()
        for w in t.neighbors(v):
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return seen


def tutte_layout(t: Tessellation, face: int | None = None):
    """Positions with the chosen face on the unit regular polygon and every
    other vertex at the barycentre of its neighbours.

    Returns ``(positions, residual)``; ``positions`` is an ``(V, 2)`` array.
    """
    face = _pinned_face(t) if face is None else face
    ring = list(dict.fromkeys(t.face_vertices(face)))
    if len(_reachable_without(t, ring)) != t.vertex_count:
        raise LayoutSingular("some vertex is not connected to the pinned face")
    n = t.vertex_count
    pos = np.zeros((n, 2))
    k = len(ring)
    for i, v in enumerate(ring):
        a = 2 * math.pi * i / k
        pos[v] = (math.cos(a), math.sin(a))
    free = [v for v in range(n) if v not in set(ring)]
    if not free:
        return pos, 0.0
    index = {v: i for i, v in enumerate(free)}
    A = lil_matrix((len(free), len(free)))
    b = np.zeros((len(free), 2))
    for v in free:
        i = index[v]
        nbrs = t.neighbors(v)
        A[i, i] = len(nbrs)
        for w in nbrs:
            if w in index:
                A[i, index[w]] -= 1
            else:
                b[i] += pos[w]
    A = A.tocsr()
    x = np.column_stack([spsolve(A, b[:, 0]), spsolve(A, b[:, 1])])
    residual = float(np.linalg.norm(A @ x - b) / max(np.linalg.norm(b), 1e-300))
    pos[free] = x
    return pos, residual


def ring_layout(t: Tessellation, face: int | None = None):
    """Concentric circles by breadth-first distance from the pinned face."""
    face = _pinned_face(t) if face is None else face
    ring = list(dict.fromkeys(t.face_vertices(face)))
    depth = {v: 0 for v in ring}
    todo = deque(ring)
    while todo:
        v = todo.popleft()
        for w in t.neighbors(v):
            if w not in depth:
                depth[w] = depth[v] + 1
                todo.append(w)
    top = max(depth.values()) + 1
    layers = {}
    for v in sorted(depth):
        layers.setdefault(depth[v], []).append(v)
    pos = np.zeros((t.vertex_count, 2))
    for d, vs in layers.items():
        r = 1 - d / top
        for i, v in enumerate(vs):
            a = 2 * math.pi * i / len(vs)
            pos[v] = (r * math.cos(a), r * math.sin(a))
    return pos


def layout(t: Tessellation, face: int | None = None):
    pos, residual = tutte_layout(t, face)
    if not np.all(np.isfinite(pos)) or residual > RESIDUAL_TOL:
        warnings.warn(f"Tutte layout residual {residual:.3g} too large; using ring layout",
                      RuntimeWarning, stacklevel=2)
        return ring_layout(t, face)
    return pos


def _colour(q) -> str:
    if q > 0:
        return "#d62728"
    if q < 0:
        return "#1f77b4"
    return "#7f7f7f"


def export_svg(t: Tessellation, size: int = 600, color_curvature: bool = False,
               face: int | None = None) -> str:
    pos = layout(t, face)
    half = size / 2
    pad = 0.92 * half

    def xy(v):
        return half + pad * pos[v][0], half - pad * pos[v][1]

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" '
           f'height="{size}" viewBox="0 0 {size} {size}">',
           f"<title>{escape(repr(t))}</title>", '<g class="edges" stroke="#333" '
           'stroke-width="1" fill="none">']
    for e, (u, v) in enumerate(t.map.edges):
        (x1, y1), (x2, y2) = xy(u), xy(v)
        out.append(f'<polyline data-edge="{e}" points="{x1:.3f},{y1:.3f} {x2:.3f},{y2:.3f}"/>')
    out.append("</g>")
    out.append('<g class="faces" font-size="9" text-anchor="middle" fill="#555">')
    pinned = _pinned_face(t) if face is None else face
    for f in t.inner_faces():
        vs = t.face_vertices(f)
        if f == pinned:  # the unbounded region of the drawing
            cx, cy = 12.0, 12.0
        else:
            cx = sum(xy(v)[0] for v in vs) / len(vs)
            cy = sum(xy(v)[1] for v in vs) / len(vs)
        out.append(f'<text data-face="{f}" x="{cx:.3f}" y="{cy + 3:.3f}">{len(vs)}</text>')
    out.append("</g>")
    out.append('<g class="vertices">')
    for v in range(t.vertex_count):
        x, y = xy(v)
        fill = "#000"
        cls = "vertex"
        if color_curvature and v in t.interior_vertices:
            q = combinatorial_curvature(t, v)
            fill = _colour(q)
            cls += " positive" if q > 0 else (" negative" if q < 0 else " zero")
        out.append(f'<circle class="{cls}" data-vertex="{v}" cx="{x:.3f}" cy="{y:.3f}" '
                   f'r="2.5" fill="{fill}"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
