"""Compare the compiled and numpy kernel backends.

Run with ``python3 benchmarks/bench_kernels.py``. Each case is timed with
``timeit`` (best of 5) on both backends and the results are checked for
agreement.
"""

from __future__ import annotations

import argparse
import math
import timeit

import numpy as np

from heatinv import _kernels
from heatinv.contour import _gauss_legendre

GL_X, GL_W = _gauss_legendre(16)

CASES = {
    "moments a=0.3 n<=4, 256 panels": lambda: _kernels.hyperbola_integrals(
        _kernels.KIND_MOMENTS, 0.3, 1.0, 0.0, 4, 6.0, 256, GL_X, GL_W
    ),
    "I(a) a=2 scaled, 64 panels": lambda: _kernels.hyperbola_integrals(
        _kernels.KIND_MOMENTS, 2.0, 1 / math.sqrt(2.0), 0.0, 0, 4.0, 64, GL_X, GL_W
    ),
    "cos ratio a=0.5, 128 panels": lambda: _kernels.hyperbola_integrals(
        _kernels.KIND_COS_RATIO, 0.5, 1.0, -0.3, 0, 5.0, 128, GL_X, GL_W
    ),
    "fourier_sum a=0.05": lambda: _kernels.fourier_sum(0.05, 1e-16, 10000),
    "erfc_sum a=0.04": lambda: _kernels.erfc_sum(0.04, 1e-16, 10000),
}


def run(repeat: int = 5, number: int = 20) -> list[tuple[str, float, float, float]]:
    backends = _kernels.available_backends()
    if "cython" not in backends:
        print("compiled backend not built; only the numpy fallback is available")
    rows = []
    for name, fn in CASES.items():
        times, values = {}, {}
        for backend in backends:
            prev = _kernels.use_backend(backend)
            try:
                values[backend] = fn()
                times[backend] = min(timeit.repeat(fn, repeat=repeat, number=number)) / number
            finally:
                _kernels.use_backend(prev)
        t_c = times.get("cython", math.nan)
        t_py = times["python"]
        diff = math.nan
        if "cython" in values:
            a, b = values["cython"], values["python"]
            a = np.atleast_1d(a[0] if isinstance(a, tuple) else a)
            b = np.atleast_1d(b[0] if isinstance(b, tuple) else b)
            diff = float(np.max(np.abs(a - b)))
        rows.append((name, t_c, t_py, diff))
    return rows


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--number", type=int, default=20)
    args = parser.parse_args()
    print(f"{'case':34s} {'cython [us]':>12s} {'numpy [us]':>12s} {'speedup':>8s} {'max |diff|':>11s}")
    for name, t_c, t_py, diff in run(args.repeat, args.number):
        print(f"{name:34s} {t_c * 1e6:12.1f} {t_py * 1e6:12.1f} {t_py / t_c:8.1f} {diff:11.2e}")


if __name__ == "__main__":
    main()
