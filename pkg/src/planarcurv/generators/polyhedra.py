"""Sphere tessellations: Platonic solids, prisms, antiprisms, truncations."""

from __future__ import annotations

from ..embedding import Tessellation, build_from_faces
from ..errors import InvalidParameter


def _check_n(n):
    if not isinstance(n, int) or n < 3:
        raise InvalidParameter(f"n must be an integer >= 3, got {n!r}")


def tetrahedron() -> Tessellation:
    return build_from_faces([(0, 1, 2), (0, 3, 1), (0, 2, 3), (1, 3, 2)])


def cube() -> Tessellation:
    return prism(4)


def octahedron() -> Tessellation:
    # 0/1 = +-x, 2/3 = +-y, 4/5 = +-z
    faces = [(a, b, c) for a in (0, 1) for b in (2, 3) for c in (4, 5)]
    return build_from_faces(faces)


def pentagon_barrel(n: int) -> Tessellation:
    """Two n-gon caps joined by two rings of n pentagons (n = 5: dodecahedron)."""
    _check_n(n)
    t = list(range(n))
    u = [n + i for i in range(n)]
    lo = [2 * n + i for i in range(n)]
    b = [3 * n + i for i in range(n)]
    faces = [tuple(t), tuple(reversed(b))]
    for i in range(n):
        j = (i + 1) % n
        faces.append((t[i], t[j], u[j], lo[i], u[i]))
        faces.append((lo[i], u[j], lo[j], b[j], b[i]))
    return build_from_faces(faces)


def dodecahedron() -> Tessellation:
    return pentagon_barrel(5)


def icosahedron() -> Tessellation:
    top, bottom = 0, 11
    u = [1 + i for i in range(5)]
    lo = [6 + i for i in range(5)]
    faces = []
    for i in range(5):
        j = (i + 1) % 5
        faces += [(top, u[i], u[j]), (u[i], lo[i], u[j]),
                  (u[j], lo[i], lo[j]), (bottom, lo[j], lo[i])]
    return build_from_faces(faces)


PLATONIC = {
    "tetrahedron": tetrahedron,
    "cube": cube,
    "octahedron": octahedron,
    "dodecahedron": dodecahedron,
    "icosahedron": icosahedron,
}


def platonic(name: str) -> Tessellation:
    try:
        return PLATONIC[name]()
    except KeyError:
        raise InvalidParameter(f"unknown Platonic solid {name!r}") from None


def prism(n: int) -> Tessellation:
    _check_n(n)
    faces = [tuple(range(n)), tuple(range(2 * n - 1, n - 1, -1))]
    for i in range(n):
        j = (i + 1) % n
        faces.append((i, j, n + j, n + i))
    return build_from_faces(faces)


def antiprism(n: int) -> Tessellation:
    """Two n-gons joined by a band of 2n triangles; vertex pattern (3,3,3,n)."""
    _check_n(n)
    faces = [tuple(range(n)), tuple(range(2 * n - 1, n - 1, -1))]
    for i in range(n):
        j = (i + 1) % n
        faces.append((i, j, n + i))
        faces.append((j, n + j, n + i))
    return build_from_faces(faces)


def truncate(t: Tessellation) -> Tessellation:
    """Cut every vertex: one new vertex per dart, near the dart's origin."""
    cmap = t.map
    faces = [tuple(cmap.vertex_darts[v]) for v in range(t.vertex_count)]
    for cycle in t.faces:
        faces.append(tuple(p for d in cycle for p in (d, d ^ 1)))
    return build_from_faces(faces)


def truncated_cube() -> Tessellation:
    return truncate(cube())
