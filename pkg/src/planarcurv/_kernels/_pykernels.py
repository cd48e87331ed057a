"""Pure-Python dart kernels (reference implementation and fallback)."""


def trace_faces(rot_next):
    """Partition darts into face cycles.

    The face successor of dart ``d = (u -> v)`` is ``rot_next[d ^ 1]``:
    the dart leaving ``v`` right after ``(v -> u)`` in the rotation at ``v``.
    Returns ``(face_of, cycles)``.
    """
    n = len(rot_next)
    face_of = [-1] * n
    cycles = []
    for start in range(n):
        if face_of[start] >= 0:
            continue
        f = len(cycles)
        cycle = []
        d = start
        while face_of[d] < 0:
            face_of[d] = f
            cycle.append(d)
            d = rot_next[d ^ 1]
        cycles.append(cycle)
    return face_of, cycles


def dart_code(rot, start):
    """Breadth-first canonical code of a connected map seen from ``start``."""
    n = len(rot)
    label = [-1] * n
    order = [start]
    label[start] = 0
    code = []
    i = 0
    while i < len(order):
        d = order[i]
        for nb in (d ^ 1, rot[d]):
            if label[nb] < 0:
                label[nb] = len(order)
                order.append(nb)
        code.append(label[d ^ 1])
        code.append(label[rot[d]])
        i += 1
    return code


def matches_code(rot, start, target):
    """True iff ``dart_code(rot, start) == target``, aborting on first mismatch."""
    n = len(rot)
    if 2 * n != len(target):
        return False
    label = [-1] * n
    order = [start]
    label[start] = 0
    i = 0
    while i < len(order):
        d = order[i]
        for nb in (d ^ 1, rot[d]):
            if label[nb] < 0:
                label[nb] = len(order)
                order.append(nb)
        if label[d ^ 1] != target[2 * i] or label[rot[d]] != target[2 * i + 1]:
            return False
        i += 1
    return i == n
