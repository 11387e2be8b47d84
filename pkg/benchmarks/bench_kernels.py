"""Compare the compiled kernels with the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 5]

Prints one line per kernel and size with the best-of-``repeat`` wall time of
each backend and the speed-up.  Both backends must agree to 1e-12 relative.
The end-to-end section times library calls in subprocesses with and without
``SZEGO_LAB_PURE=1``.
"""
from __future__ import annotations

import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from szegolab import _fallback

try:
    from szegolab import _kernels
except ImportError:
    _kernels = None


def _panel_case(n_panels):
    gl_x, gl_w = np.polynomial.legendre.leggauss(10)
    edges = np.geomspace(1e-6, np.pi, n_panels + 1)
    return (-1.5, 1e-4, edges[:-1].copy(), edges[1:].copy(), gl_x, gl_w)


def _radial_case(n):
    rng = np.random.default_rng(0)
    t = 2 * np.pi * (np.arange(n) + 0.5) / n
    coeffs = rng.standard_normal(9) + 1j * rng.standard_normal(9)
    return (coeffs, 0.999, np.cos(t), np.sin(t), 0.5, 3.0)


CASES = {
    "panel_sum": (_panel_case, [64, 1024, 16384]),
    "radial_mean": (_radial_case, [4096, 65536, 1048576]),
}


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)
    if _kernels is None:
        print("compiled extension not built; run `pip install -e . --no-build-isolation`")
        return 1
    print(f"{'kernel':<12} {'size':>8} {'python [ms]':>12} {'cython [ms]':>12} {'speed-up':>9}")
    for name, (make, sizes) in CASES.items():
        for n in sizes:
            case = make(n)
            py, cy = getattr(_fallback, name), getattr(_kernels, name)
            ref, got = py(*case), cy(*case)
            if abs(got - ref) > 1e-12 * abs(ref):
                raise SystemExit(f"{name}[{n}]: backends disagree ({ref!r} vs {got!r})")
            number = max(1, 20000 // n)
            t_py = min(timeit.repeat(lambda: py(*case), number=number, repeat=args.repeat)) / number
            t_cy = min(timeit.repeat(lambda: cy(*case), number=number, repeat=args.repeat)) / number
            print(f"{name:<12} {n:>8} {1e3 * t_py:>12.4f} {1e3 * t_cy:>12.4f} {t_py / t_cy:>8.2f}x")
    print()
    print(f"{'end-to-end':<34} {'python [s]':>10} {'cython [s]':>10} {'speed-up':>9}")
    for label, stmt in END_TO_END.items():
        t_py, t_cy = (_timed_subprocess(stmt, pure) for pure in ("1", "0"))
        print(f"{label:<34} {t_py:>10.3f} {t_cy:>10.3f} {t_py / t_cy:>8.2f}x")
    return 0


END_TO_END = {
    "ap_scan(0.5, 6)": "muckenhoupt.ap_scan(0.5, 6.0, workers=1)",
    "radial_means, 50 degree-8 inputs": (
        "rng = np.random.default_rng(0)\n"
        "for _ in range(50):\n"
        "    norms.radial_means(FourierCoeffs(0, rng.standard_normal(9) + 0j), 0.5, 3.0, norms.default_radii())"
    ),
}


def _timed_subprocess(stmt: str, pure: str) -> float:
    setup = "import numpy as np\nfrom szegolab import muckenhoupt, norms\nfrom szegolab.circle import FourierCoeffs"
    code = (
        f"import timeit\nsetup = {setup!r}\nstmt = {stmt!r}\n"
        "print(min(timeit.repeat(stmt, setup, number=1, repeat=3)))"
    )
    env = dict(os.environ, SZEGO_LAB_PURE=pure)
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout.strip())


if __name__ == "__main__":
    raise SystemExit(main())
