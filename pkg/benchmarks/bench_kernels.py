"""Compare the compiled and pure-Python dart kernels.

    python benchmarks/bench_kernels.py [--repeat N]

Times face tracing and isomorphism codes on growing graphs with each
backend and prints the speed-up.
"""

import argparse
import timeit

from planarcurv import _kernels
from planarcurv._kernels import _pykernels
from planarcurv.generators import antiprism, rhombille, sharp_big_face, truncate

try:
    from planarcurv._kernels import _ckernels
except ImportError:
    _ckernels = None


def graphs():
    yield "antiprism(200)", antiprism(200)
    yield "truncate(antiprism(200))", truncate(antiprism(200))
    yield "rhombille(8)", rhombille(8)
    yield "sharp_big_face(12, 30)", sharp_big_face(12, 30)


def bench(impl, t, repeat):
    nxt, prv = t.map.kernel_buffers()
    trace = min(timeit.repeat(lambda: impl.trace_faces(nxt), number=5, repeat=repeat)) / 5
    code = impl.dart_code(prv, 0)
    target = _kernels.as_dart_array(code)
    match = min(timeit.repeat(lambda: impl.matches_code(prv, 0, target), number=5,
                              repeat=repeat)) / 5
    return trace, match


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled kernels are not built; only the Python backend is available")
    print(f"{'graph':<26}{'darts':>8}  {'kernel':<8}{'python ms':>11}{'cython ms':>11}"
          f"{'speed-up':>10}")
    for name, t in graphs():
        py = bench(_pykernels, t, args.repeat)
        cy = bench(_ckernels, t, args.repeat) if _ckernels else (float("nan"),) * 2
        for label, a, b in (("trace", py[0], cy[0]), ("match", py[1], cy[1])):
            print(f"{name:<26}{t.map.dart_count:>8}  {label:<8}{a * 1e3:>11.3f}"
                  f"{b * 1e3:>11.3f}{a / b:>9.1f}x")


if __name__ == "__main__":
    main()
