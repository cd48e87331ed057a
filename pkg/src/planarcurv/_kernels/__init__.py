"""Hot dart kernels: compiled Cython module when available, pure Python otherwise.

Set ``PLANARCURV_PURE_PYTHON=1`` to force the fallback.
"""

import os
from array import array

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if not os.environ.get("PLANARCURV_PURE_PYTHON"):
    try:
        from . import _ckernels as _impl  # noqa: F811
        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels


def as_dart_array(values):
    """Pack a dart sequence for the kernels (int64 buffer)."""
    return array("q", values)


def trace_faces(rot_next):
    return _impl.trace_faces(rot_next)


def dart_code(rot, start):
    return _impl.dart_code(rot, start)


def matches_code(rot, start, target):
    return _impl.matches_code(rot, start, target)
