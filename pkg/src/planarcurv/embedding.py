"""Dart-based combinatorial maps, face tracing and tessellation checks.

Darts come in twin pairs: darts ``2i`` and ``2i + 1`` are the two
orientations of edge ``i`` and ``twin(d) == d ^ 1``.  Rotation lists are
read as counterclockwise.  The face successor of ``(u -> v)`` is
``(v -> w)`` where ``w`` immediately follows ``u`` in the rotation at
``v``; with counterclockwise rotations bounded faces are therefore traced
clockwise and the unbounded face of a plane drawing counterclockwise.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import _kernels
from .errors import (
    AsymmetricAdjacency,
    Disconnected,
    EulerViolation,
    InconsistentFaces,
    ModeMismatch,
    MultiEdge,
    OuterFaceNotFound,
    SelfLoop,
    UnknownFace,
    UnknownVertex,
)

SPHERE = "sphere"
PATCH = "patch"


class CombinatorialMap:
    """Rotation system with explicit darts.

    ``vertex_darts[v]`` lists the darts leaving ``v`` in counterclockwise
    order; ``rotations[v]`` lists the matching neighbour vertices.
    """

    __slots__ = ("rotations", "vertex_darts", "origin", "rot_next", "rot_prev",
                 "edges", "_dart_index", "_rot_next_buf", "_rot_prev_buf")

    def __init__(self, rotations, vertex_darts, origin, edges):
        self.rotations = tuple(tuple(r) for r in rotations)
        self.vertex_darts = tuple(tuple(r) for r in vertex_darts)
        self.origin = tuple(origin)
        self.edges = tuple(edges)
        rot_next = [0] * len(origin)
        rot_prev = [0] * len(origin)
        for darts in self.vertex_darts:
            k = len(darts)
            for j, d in enumerate(darts):
                rot_next[d] = darts[(j + 1) % k]
                rot_prev[d] = darts[j - 1]
        self.rot_next = tuple(rot_next)
        self.rot_prev = tuple(rot_prev)
        index = {}
        for d, u in enumerate(self.origin):
            index.setdefault((u, self.origin[d ^ 1]), d)
        self._dart_index = index
        self._rot_next_buf = None
        self._rot_prev_buf = None

    @property
    def vertex_count(self) -> int:
        return len(self.rotations)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def dart_count(self) -> int:
        return len(self.origin)

    @staticmethod
    def twin(d: int) -> int:
        return d ^ 1

    def target(self, d: int) -> int:
        return self.origin[d ^ 1]

    def dart(self, u: int, v: int) -> int:
        """The dart ``u -> v``; raises ``KeyError`` if there is no such edge."""
        return self._dart_index[(u, v)]

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self._dart_index

    def face_next(self, d: int) -> int:
        return self.rot_next[d ^ 1]

    def face_prev(self, d: int) -> int:
        return self.rot_prev[d] ^ 1

    def kernel_buffers(self):
        """int64 buffers of ``rot_next`` / ``rot_prev`` for the dart kernels."""
        if self._rot_next_buf is None:
            self._rot_next_buf = _kernels.as_dart_array(self.rot_next)
            self._rot_prev_buf = _kernels.as_dart_array(self.rot_prev)
        return self._rot_next_buf, self._rot_prev_buf


def _build_map(rotations: Sequence[Sequence[int]], strict: bool) -> CombinatorialMap:
    n = len(rotations)
    counts = defaultdict(int)
    for u, nbrs in enumerate(rotations):
        for v in nbrs:
            if not 0 <= v < n:
                raise UnknownVertex(f"vertex {u} lists unknown neighbour {v}")
            counts[(u, v)] += 1
    for (u, v), c in counts.items():
        if u == v:
            if strict:
                raise SelfLoop(f"vertex {u} lists itself")
            if c % 2:
                raise AsymmetricAdjacency(f"vertex {u} lists itself an odd number of times")
        elif counts.get((v, u), 0) != c:
            raise AsymmetricAdjacency(f"{u} lists {v} {c} time(s) but {v} lists {u} "
                                      f"{counts.get((v, u), 0)} time(s)")
        elif strict and c > 1:
            raise MultiEdge(f"vertices {u} and {v} are joined {c} times")

    origin = []
    edges = []
    vertex_darts = [[None] * len(r) for r in rotations]
    pending = defaultdict(list)  # (v, u) -> darts v->u awaiting their slot at v
    loop_open = {}
    for u, nbrs in enumerate(rotations):
        for j, v in enumerate(nbrs):
            if v == u:
                if u in loop_open:
                    vertex_darts[u][j] = loop_open.pop(u) ^ 1
                else:
                    d = len(origin)
                    origin += [u, u]
                    edges.append((u, u))
                    vertex_darts[u][j] = d
                    loop_open[u] = d
            elif v > u:
                d = len(origin)
                origin += [u, v]
                edges.append((u, v))
                vertex_darts[u][j] = d
                pending[(v, u)].append(d + 1)
            else:
                # first occurrence at u pairs with last occurrence at v
                vertex_darts[u][j] = pending[(u, v)].pop()
    return CombinatorialMap(rotations, vertex_darts, origin, edges)


def _is_connected(cmap: CombinatorialMap) -> bool:
    n = cmap.vertex_count
    if n == 0:
        return False
    seen = [False] * n
    seen[0] = True
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in cmap.rotations[u]:
            if not seen[v]:
                seen[v] = True
                queue.append(v)
    return all(seen)


class Tessellation:
    """An embedded graph together with its traced faces.

    In sphere mode every vertex, edge and face counts as interior.
    """

    mode = SPHERE
    outer_face = None

    def __init__(self, cmap: CombinatorialMap):
        self.map = cmap
        face_of, cycles = _kernels.trace_faces(cmap.kernel_buffers()[0])
        self.face_of = tuple(face_of)
        self.faces = tuple(tuple(c) for c in cycles)
        self._vertex_faces = None

    # -- counts -------------------------------------------------------
    @property
    def vertex_count(self) -> int:
        return self.map.vertex_count

    @property
    def edge_count(self) -> int:
        return self.map.edge_count

    @property
    def face_count(self) -> int:
        return len(self.faces)

    @property
    def euler_characteristic(self) -> int:
        return self.vertex_count - self.edge_count + self.face_count

    @property
    def rotations(self):
        return self.map.rotations

    # -- local structure ----------------------------------------------
    def degree(self, v: int) -> int:
        return len(self.map.rotations[v])

    def face_degree(self, f: int) -> int:
        return len(self.faces[f])

    def neighbors(self, v: int):
        return self.map.rotations[v]

    def faces_at(self, v: int):
        """Faces of the corners at ``v``, in rotation order."""
        return tuple(self.face_of[d] for d in self.map.vertex_darts[v])

    def face_vertices(self, f: int):
        return tuple(self.map.origin[d] for d in self.faces[f])

    def face_edges(self, f: int):
        return tuple(d >> 1 for d in self.faces[f])

    def edge_ends(self, e: int):
        return self.map.edges[e]

    def edge_faces(self, e: int):
        return self.face_of[2 * e], self.face_of[2 * e + 1]

    def vertex_face_sets(self):
        if self._vertex_faces is None:
            self._vertex_faces = tuple(frozenset(self.faces_at(v))
                                       for v in range(self.vertex_count))
        return self._vertex_faces

    def check_face(self, f: int) -> None:
        if not (isinstance(f, int) and 0 <= f < self.face_count):
            raise UnknownFace(f"no face {f!r}")

    # -- interior classification ----------------------------------------
    @property
    def interior_vertices(self) -> frozenset:
        return frozenset(range(self.vertex_count))

    @property
    def interior_edges(self) -> frozenset:
        return frozenset(range(self.edge_count))

    @property
    def interior_faces(self) -> frozenset:
        return frozenset(range(self.face_count))

    def inner_faces(self):
        """Faces other than the outer face, in id order."""
        return [f for f in range(self.face_count) if f != self.outer_face]

    def __repr__(self):
        return (f"<{type(self).__name__} V={self.vertex_count} "
                f"E={self.edge_count} F={self.face_count}>")


class Patch(Tessellation):
    """A finite disk window of a tessellation with one designated outer face.

    A vertex is interior iff the outer face is not among its faces, an edge
    iff both its ends are interior, and a face iff it is not the outer face
    and all of its boundary vertices are interior.
    """

    mode = PATCH

    def __init__(self, cmap: CombinatorialMap, outer_dart: int):
        super().__init__(cmap)
        self.outer_face = self.face_of[outer_dart]
        outer = self.outer_face
        iv = frozenset(v for v in range(cmap.vertex_count)
                       if outer not in self.faces_at(v))
        self._interior_vertices = iv
        self._interior_edges = frozenset(
            e for e, (u, v) in enumerate(cmap.edges) if u in iv and v in iv)
        self._interior_faces = frozenset(
            f for f in range(self.face_count)
            if f != outer and all(v in iv for v in self.face_vertices(f)))

    @property
    def interior_vertices(self) -> frozenset:
        return self._interior_vertices

    @property
    def interior_edges(self) -> frozenset:
        return self._interior_edges

    @property
    def interior_faces(self) -> frozenset:
        return self._interior_faces


def build_from_rotation_system(rotations: Sequence[Sequence[int]], mode: str = SPHERE,
                               outer_hint: tuple[int, int] | None = None,
                               strict: bool = True) -> Tessellation:
    """Build a tessellation (or patch) from counterclockwise neighbour lists.

    ``outer_hint`` names the dart ``(u, v)`` lying on the outer face and is
    required in patch mode.  With ``strict=False`` self-loops, multi-edges,
    disconnection and a wrong Euler characteristic are tolerated so that
    :func:`validate_tessellation` can report them.
    """
    if mode not in (SPHERE, PATCH):
        raise ValueError(f"unknown mode {mode!r}")
    cmap = _build_map(rotations, strict)
    if strict and not _is_connected(cmap):
        raise Disconnected("the graph is not connected")
    if mode == PATCH:
        if outer_hint is None:
            raise OuterFaceNotFound("patch mode needs an outer-face dart")
        try:
            outer_dart = cmap.dart(*outer_hint)
        except (KeyError, TypeError):
            raise OuterFaceNotFound(f"no dart {outer_hint!r}") from None
        t = Patch(cmap, outer_dart)
    else:
        t = Tessellation(cmap)
    if strict and t.euler_characteristic != 2:
        raise EulerViolation(f"V - E + F = {t.euler_characteristic}, expected 2")
    return t


def rotations_from_faces(faces: Sequence[Sequence[int]]) -> list[list[int]]:
    """Derive a rotation system for a closed surface from its face cycles.

    Faces may be listed in either orientation; they are made coherent first.
    """
    faces = [list(f) for f in faces]
    edge_faces = defaultdict(list)
    for i, f in enumerate(faces):
        for j in range(len(f)):
            edge_faces[frozenset((f[j], f[(j + 1) % len(f)]))].append(i)
    flip = [None] * len(faces)
    for root in range(len(faces)):
        if flip[root] is not None:
            continue
        flip[root] = False
        queue = deque([root])
        while queue:
            i = queue.popleft()
            f = faces[i][::-1] if flip[i] else faces[i]
            for j in range(len(f)):
                u, v = f[j], f[(j + 1) % len(f)]
                for k in edge_faces[frozenset((u, v))]:
                    if k == i:
                        continue
                    g = faces[k]
                    fwd = any(g[m] == u and g[(m + 1) % len(g)] == v for m in range(len(g)))
                    want = fwd  # neighbour must traverse (v, u)
                    if flip[k] is None:
                        flip[k] = want
                        queue.append(k)
                    elif flip[k] != want:
                        raise InconsistentFaces("faces cannot be oriented coherently")
    succ = defaultdict(dict)
    for i, f in enumerate(faces):
        f = f[::-1] if flip[i] else f
        k = len(f)
        for j in range(k):
            u, v, w = f[j - 1], f[j], f[(j + 1) % k]
            if u in succ[v]:
                raise InconsistentFaces(f"corner {u}-{v} used twice")
            succ[v][u] = w
    n = max(succ) + 1 if succ else 0
    rotations = []
    for v in range(n):
        s = succ.get(v)
        if not s:
            raise InconsistentFaces(f"vertex {v} lies on no face")
        start = min(s)
        rot = [start]
        w = s[start]
        while w != start:
            rot.append(w)
            if w not in s or len(rot) > len(s):
                raise InconsistentFaces(f"faces around vertex {v} do not close up")
            w = s[w]
        if len(rot) != len(s):
            raise InconsistentFaces(f"vertex {v} has a pinched star")
        rotations.append(rot)
    return rotations


def build_from_faces(faces: Sequence[Sequence[int]], strict: bool = True) -> Tessellation:
    """Sphere tessellation from a list of face cycles."""
    return build_from_rotation_system(rotations_from_faces(faces), SPHERE, strict=strict)


def as_patch(t: Tessellation, outer_face: int) -> Patch:
    """Reinterpret a sphere tessellation as a patch whose outer face is ``outer_face``."""
    t.check_face(outer_face)
    d = t.faces[outer_face][0]
    hint = (t.map.origin[d], t.map.target(d))
    return build_from_rotation_system(t.rotations, PATCH, outer_hint=hint)


# ---------------------------------------------------------------------------
# validation

@dataclass(frozen=True)
class Violation:
    condition: str
    message: str
    witnesses: tuple = ()


class ValidationReport:
    """Violated tessellation conditions; empty means valid."""

    def __init__(self, violations: Iterable[Violation] = ()):
        self.violations = tuple(violations)

    def __len__(self):
        return len(self.violations)

    def __iter__(self):
        return iter(self.violations)

    def __bool__(self):
        return bool(self.violations)

    @property
    def ok(self) -> bool:
        return not self.violations

    def conditions(self) -> set[str]:
        return {v.condition for v in self.violations}

    def of(self, condition: str) -> list[Violation]:
        return [v for v in self.violations if v.condition == condition]

    def __repr__(self):
        return f"ValidationReport({list(self.violations)!r})"


def validate_tessellation(t: Tessellation) -> ValidationReport:
    """Check simplicity, connectivity, Euler and the three tessellation conditions.

    Patches are only checked where their stars are complete: vertex degrees
    on interior vertices, face conditions on non-outer faces.
    """
    out = []
    cmap = t.map
    pair_count = defaultdict(list)
    for e, (u, v) in enumerate(cmap.edges):
        if u == v:
            out.append(Violation("self-loop", f"edge {e} is a loop at {u}", (u,)))
        else:
            pair_count[(min(u, v), max(u, v))].append(e)
    for pair, es in sorted(pair_count.items()):
        if len(es) > 1:
            out.append(Violation("multi-edge", f"{len(es)} edges join {pair[0]} and {pair[1]}",
                                 pair))
    if not _is_connected(cmap):
        out.append(Violation("disconnected", "the graph is not connected"))
    if t.euler_characteristic != 2:
        out.append(Violation("euler", f"V - E + F = {t.euler_characteristic}"))

    for v in sorted(t.interior_vertices):
        if t.degree(v) < 3:
            out.append(Violation("vertex-degree", f"vertex {v} has degree {t.degree(v)}", (v,)))
    inner = t.inner_faces()
    for f in inner:
        verts = t.face_vertices(f)
        if len(verts) < 3:
            out.append(Violation("face-degree", f"face {f} has degree {len(verts)}", (f,)))
        if len(set(verts)) != len(verts):
            out.append(Violation("closed-disk", f"boundary of face {f} repeats a vertex", (f,)))
    for e in range(t.edge_count):
        a, b = t.edge_faces(e)
        if a == b:
            out.append(Violation("two-faces", f"edge {e} lies on face {a} twice", (e, a)))

    # closed faces meet in nothing, a vertex, or one closed edge
    vsets = {f: set(t.face_vertices(f)) for f in inner}
    esets = {f: set(t.face_edges(f)) for f in inner}
    by_vertex = defaultdict(list)
    for f in inner:
        for v in vsets[f]:
            by_vertex[v].append(f)
    seen = set()
    for fs in by_vertex.values():
        for i, f in enumerate(fs):
            for g in fs[i + 1:]:
                key = (min(f, g), max(f, g))
                if key in seen:
                    continue
                seen.add(key)
                shared_v = vsets[f] & vsets[g]
                shared_e = esets[f] & esets[g]
                if not shared_e and len(shared_v) == 1:
                    continue
                if len(shared_e) == 1 and shared_v == set(cmap.edges[next(iter(shared_e))]):
                    continue
                out.append(Violation(
                    "face-intersection",
                    f"faces {key[0]} and {key[1]} share vertices {sorted(shared_v)} "
                    f"and edges {sorted(shared_e)}", key))
    return ValidationReport(out)


# ---------------------------------------------------------------------------
# queries

def face_boundary(t: Tessellation, face: int) -> list[int]:
    """Boundary vertices of ``face`` in traversal order."""
    t.check_face(face)
    return list(t.face_vertices(face))


def lower_adjacent_faces(t: Tessellation, sigma: int, tau: int) -> bool:
    """True iff the two faces share an edge."""
    t.check_face(sigma)
    t.check_face(tau)
    if sigma == tau:
        return False
    return any(t.face_of[d ^ 1] == tau for d in t.faces[sigma])


def sigma_neighbours(t: Tessellation, sigma: int, tau: int, omega: int) -> bool:
    """True iff ``tau`` and ``omega`` are distinct faces lower-adjacent to
    ``sigma`` whose closures meet in a vertex of ``sigma``."""
    t.check_face(omega)
    if tau == omega or sigma in (tau, omega):
        return False
    if not (lower_adjacent_faces(t, sigma, tau) and lower_adjacent_faces(t, sigma, omega)):
        return False
    common = set(t.face_vertices(tau)) & set(t.face_vertices(omega))
    return bool(common & set(t.face_vertices(sigma)))


sigma_adjacent = sigma_neighbours


def isomorphic(a: Tessellation, b: Tessellation) -> bool:
    """Orientation-preserving or -reversing map isomorphism of sphere tessellations."""
    if a.mode != SPHERE or b.mode != SPHERE:
        raise ModeMismatch("isomorphism is defined for sphere tessellations")
    if (a.vertex_count, a.edge_count, a.face_count) != (b.vertex_count, b.edge_count,
                                                       b.face_count):
        return False
    if sorted(map(len, a.rotations)) != sorted(map(len, b.rotations)):
        return False
    if sorted(map(len, a.faces)) != sorted(map(len, b.faces)):
        return False
    a_next, _ = a.map.kernel_buffers()
    target = _kernels.as_dart_array(_kernels.dart_code(a_next, 0))
    b_next, b_prev = b.map.kernel_buffers()
    deg0 = a.degree(a.map.origin[0])
    for s in range(b.map.dart_count):
        if b.degree(b.map.origin[s]) != deg0:
            continue
        if _kernels.matches_code(b_next, s, target) or _kernels.matches_code(b_prev, s, target):
            return True
    return False
