"""Kernel backend selection: compiled extension if importable, numpy otherwise.

Set ``SZEGO_LAB_PURE=1`` to force the numpy fallback.
"""
import os

import numpy as np

from . import _fallback

BACKEND = "python"
_impl = _fallback
if os.environ.get("SZEGO_LAB_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _impl  # noqa: F811

        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _fallback


def _f64(a):
    return np.ascontiguousarray(a, dtype=float)


def panel_sum(gamma, floor, lo, hi, gl_x, gl_w):
    return _impl.panel_sum(float(gamma), float(floor), _f64(lo), _f64(hi), _f64(gl_x), _f64(gl_w))


def radial_mean(coeffs, r, cos_t, sin_t, alpha, p):
    coeffs = np.ascontiguousarray(coeffs, dtype=complex)
    return _impl.radial_mean(coeffs, float(r), _f64(cos_t), _f64(sin_t), float(alpha), float(p))
