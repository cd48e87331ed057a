import importlib
import os
import subprocess
import sys

import pytest

from corpus import CORPUS, get
from planarcurv import _kernels
from planarcurv._kernels import _pykernels


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_backends_agree(name):
    t = get(name)
    nxt, prv = t.map.kernel_buffers()
    face_py, cycles_py = _pykernels.trace_faces(nxt)
    face, cycles = _kernels.trace_faces(nxt)
    assert list(face) == list(face_py)
    assert [list(c) for c in cycles] == [list(c) for c in cycles_py]
    for start in (0, t.map.dart_count - 1):
        code = _pykernels.dart_code(prv, start)
        assert list(_kernels.dart_code(prv, start)) == list(code)
        target = _kernels.as_dart_array(code)
        assert _kernels.matches_code(prv, start, target)
        assert _pykernels.matches_code(prv, start, target)


def test_backend_name():
    assert _kernels.BACKEND in ("cython", "python")


def test_pure_python_switch():
    env = dict(os.environ, PLANARCURV_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c",
                          "import planarcurv._kernels as k; print(k.BACKEND)"],
                         capture_output=True, text=True, env=env, check=True)
    assert out.stdout.strip() == "python"


def test_compiled_backend_available():
    try:
        importlib.import_module("planarcurv._kernels._ckernels")
    except ImportError:
        pytest.skip("compiled extension not built")
    assert _kernels.BACKEND == "cython" or os.environ.get("PLANARCURV_PURE_PYTHON")
