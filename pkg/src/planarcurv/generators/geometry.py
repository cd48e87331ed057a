"""Plane-drawing helpers used to grow periodic tiling windows.

Coordinates are floats and only ever decide the cyclic order of
neighbours; no curvature value depends on them.  Tiles are tuples of
rounded points listed in cyclic order.
"""

from __future__ import annotations

import math
from collections import defaultdict

from ..embedding import PATCH, SPHERE, build_from_rotation_system
from ..errors import InvalidParameter

SQRT3_2 = math.sqrt(3) / 2


def pt(x: float, y: float) -> tuple[float, float]:
    return (round(x, 7) + 0.0, round(y, 7) + 0.0)


def _angle(origin, p) -> float:
    return math.atan2(p[1] - origin[1], p[0] - origin[0]) % (2 * math.pi)


def rotations_by_angle(coords, edges):
    nbrs = defaultdict(set)
    for u, v in edges:
        nbrs[u].add(v)
        nbrs[v].add(u)
    return [sorted(nbrs[v], key=lambda w: _angle(coords[v], coords[w]))
            for v in range(len(coords))]


def outer_dart(coords, rotations):
    """Dart ``(u, v)`` on the unbounded face of a straight-line drawing."""
    v = max(range(len(coords)), key=lambda i: (coords[i][0], coords[i][1]))
    u = max(rotations[v], key=lambda w: _angle(coords[v], coords[w]))
    return u, v


def plane_patch(coords, edges):
    """Patch whose outer face is the unbounded face of the drawing."""
    rotations = rotations_by_angle(coords, edges)
    return build_from_rotation_system(rotations, PATCH, outer_hint=outer_dart(coords, rotations))


def plane_sphere(coords, edges):
    """Sphere tessellation from a drawing; the unbounded face becomes a face."""
    return build_from_rotation_system(rotations_by_angle(coords, edges), SPHERE)


# ---------------------------------------------------------------------------
# tile sets

def tile_edges(tile):
    return [(tile[i], tile[(i + 1) % len(tile)]) for i in range(len(tile))]


def _incidence(tiles):
    at_vertex = defaultdict(list)
    at_edge = defaultdict(list)
    nbrs = defaultdict(set)
    for i, tile in enumerate(tiles):
        for p in tile:
            at_vertex[p].append(i)
        for a, b in tile_edges(tile):
            at_edge[frozenset((a, b))].append(i)
            nbrs[a].add(b)
            nbrs[b].add(a)
    return at_vertex, at_edge, nbrs


def _complete(at_edge, nbrs):
    return {v for v, ws in nbrs.items()
            if all(len(at_edge[frozenset((v, w))]) == 2 for w in ws)}


def _centroid(points):
    return (sum(p[0] for p in points) / len(points), sum(p[1] for p in points) / len(points))


def _around(center, points):
    return tuple(sorted(points, key=lambda p: _angle(center, p)))


def dual_tiles(tiles):
    at_vertex, at_edge, nbrs = _incidence(tiles)
    centers = [pt(*_centroid(t)) for t in tiles]
    return [_around(v, [centers[i] for i in at_vertex[v]])
            for v in sorted(_complete(at_edge, nbrs))]


def medial_tiles(tiles):
    at_vertex, at_edge, nbrs = _incidence(tiles)

    def mid(a, b):
        return pt((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)

    out = [_around(v, [mid(v, w) for w in nbrs[v]]) for v in sorted(_complete(at_edge, nbrs))]
    out += [tuple(mid(a, b) for a, b in tile_edges(t)) for t in tiles]
    return out


def truncate_tiles(tiles, s=1 / 3):
    at_vertex, at_edge, nbrs = _incidence(tiles)

    def toward(a, b, r):
        return pt(a[0] + r * (b[0] - a[0]), a[1] + r * (b[1] - a[1]))

    out = [_around(v, [toward(v, w, s) for w in nbrs[v]]) for v in sorted(_complete(at_edge, nbrs))]
    for t in tiles:
        out.append(tuple(q for a, b in tile_edges(t) for q in (toward(a, b, s), toward(a, b, 1 - s))))
    return out


def kis_tiles(tiles, select=lambda tile: True):
    """Cone every selected tile to its centroid."""
    out = []
    for t in tiles:
        if not select(t):
            out.append(t)
            continue
        c = pt(*_centroid(t))
        out += [(a, b, c) for a, b in tile_edges(t)]
    return out


def triangular_tiles(n):
    def p(i, j):
        return pt(i + 0.5 * j, SQRT3_2 * j)

    out = []
    for i in range(-n, n):
        for j in range(-n, n):
            out.append((p(i, j), p(i + 1, j), p(i, j + 1)))
            out.append((p(i + 1, j), p(i + 1, j + 1), p(i, j + 1)))
    return out


def square_tiles(n):
    return [(pt(i, j), pt(i + 1, j), pt(i + 1, j + 1), pt(i, j + 1))
            for i in range(-n, n) for j in range(-n, n)]


def elongated_triangular_tiles(n):
    """Rows of unit squares alternating with rows of triangles (vertex type 3.3.3.4.4)."""
    out = []
    for r in range(-n, n):
        y0 = r * (1 + SQRT3_2)
        y1 = y0 + 1
        y2 = y0 + 1 + SQRT3_2
        s = 0.5 * (r % 2)
        for i in range(-n, n):
            x = i + s
            out.append((pt(x, y0), pt(x + 1, y0), pt(x + 1, y1), pt(x, y1)))
            out.append((pt(x, y1), pt(x + 1, y1), pt(x + 0.5, y2)))
            out.append((pt(x + 0.5, y2), pt(x + 1, y1), pt(x + 1.5, y2)))
    return out


def window(tiles, radius, seed=(0.0, 0.0)):
    """Tiles within ``radius`` vertex-sharing layers of the complete vertex nearest ``seed``.

    Raises :class:`InvalidParameter` if the window reaches the ragged edge
    of the tile set.
    """
    at_vertex, at_edge, nbrs = _incidence(tiles)
    complete = _complete(at_edge, nbrs)
    if not complete:
        raise InvalidParameter("tile set has no complete vertex")
    start = min(complete, key=lambda p: ((p[0] - seed[0]) ** 2 + (p[1] - seed[1]) ** 2, p))
    chosen = set(at_vertex[start])
    for _ in range(radius - 1):
        verts = {p for i in chosen for p in tiles[i]}
        chosen |= {i for p in verts for i in at_vertex[p]}
    while True:  # absorb tiles enclosed by the selection
        verts = {p for i in chosen for p in tiles[i]}
        extra = {i for p in verts for i in at_vertex[p]
                 if i not in chosen and all(q in verts for q in tiles[i])}
        if not extra:
            break
        chosen |= extra
    ragged = {i for e, ts in at_edge.items() if len(ts) == 1 for i in ts}
    if chosen & ragged:
        raise InvalidParameter("window reaches the edge of the generated tiles")
    return [tiles[i] for i in sorted(chosen)], start


def patch_from_tiles(tiles, seed_point=None):
    """Build a patch from a disk-shaped set of tiles."""
    verts = {p for t in tiles for p in t}
    if seed_point is None:
        seed_point = _centroid(list(verts))
    order = sorted(verts, key=lambda p: (round(math.dist(p, seed_point), 5),
                                         round(_angle(seed_point, p), 5), p))
    ids = {p: i for i, p in enumerate(order)}
    edges = {frozenset((ids[a], ids[b])) for t in tiles for a, b in tile_edges(t)}
    edges = [tuple(sorted(e)) for e in edges]
    patch = plane_patch(order, edges)
    if patch.face_count - 1 != len(tiles):
        raise InvalidParameter("tile window is not a disk")
    return patch


def tiling_patch(make_tiles, radius, extent=None):
    """Grow a window of ``radius`` layers, enlarging the base tile set as needed."""
    if radius < 1:
        raise InvalidParameter("radius must be at least 1")
    n = extent or 2 * radius + 4
    for _ in range(6):
        try:
            tiles, start = window(make_tiles(n), radius)
        except InvalidParameter:
            n *= 2
            continue
        return patch_from_tiles(tiles, start)
    raise InvalidParameter(f"could not grow a window of radius {radius}")
