# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled dart kernels; same contracts as ``_pykernels``."""

from cpython.mem cimport PyMem_Malloc, PyMem_Free


def trace_faces(const long long[:] rot_next):
    cdef Py_ssize_t n = rot_next.shape[0]
    cdef Py_ssize_t start, d, f = 0
    cdef long long *face = <long long *> PyMem_Malloc(max(n, 1) * sizeof(long long))
    if face == NULL:
        raise MemoryError()
    cycles = []
    try:
        for d in range(n):
            face[d] = -1
        for start in range(n):
            if face[start] >= 0:
                continue
            cycle = []
            d = start
            while face[d] < 0:
                face[d] = f
                cycle.append(d)
                d = rot_next[d ^ 1]
            cycles.append(cycle)
            f += 1
        face_of = [face[d] for d in range(n)]
    finally:
        PyMem_Free(face)
    return face_of, cycles


cdef Py_ssize_t _label(const long long[:] rot, Py_ssize_t start,
                       long long *label, long long *order,
                       const long long[:] target, bint check):
    # Returns number of darts processed; stops early on mismatch when check.
    cdef Py_ssize_t n = rot.shape[0]
    cdef Py_ssize_t i, d, nb, size = 1, j
    for i in range(n):
        label[i] = -1
    label[start] = 0
    order[0] = start
    i = 0
    while i < size:
        d = order[i]
        for j in range(2):
            nb = (d ^ 1) if j == 0 else rot[d]
            if label[nb] < 0:
                label[nb] = size
                order[size] = nb
                size += 1
        if check:
            if label[d ^ 1] != target[2 * i] or label[rot[d]] != target[2 * i + 1]:
                return -1
        i += 1
    return i


def dart_code(const long long[:] rot, Py_ssize_t start):
    cdef Py_ssize_t n = rot.shape[0], i, size
    cdef long long *label = <long long *> PyMem_Malloc(max(n, 1) * sizeof(long long))
    cdef long long *order = <long long *> PyMem_Malloc(max(n, 1) * sizeof(long long))
    if label == NULL or order == NULL:
        PyMem_Free(label)
        PyMem_Free(order)
        raise MemoryError()
    try:
        size = _label(rot, start, label, order, rot, False)
        code = []
        for i in range(size):
            code.append(label[order[i] ^ 1])
            code.append(label[rot[order[i]]])
    finally:
        PyMem_Free(label)
        PyMem_Free(order)
    return code


def matches_code(const long long[:] rot, Py_ssize_t start, const long long[:] target):
    cdef Py_ssize_t n = rot.shape[0], done
    if 2 * n != target.shape[0]:
        return False
    cdef long long *label = <long long *> PyMem_Malloc(max(n, 1) * sizeof(long long))
    cdef long long *order = <long long *> PyMem_Malloc(max(n, 1) * sizeof(long long))
    if label == NULL or order == NULL:
        PyMem_Free(label)
        PyMem_Free(order)
        raise MemoryError()
    try:
        done = _label(rot, start, label, order, target, True)
    finally:
        PyMem_Free(label)
        PyMem_Free(order)
    return done == n
