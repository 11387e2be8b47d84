"""Pure numpy implementations of the compiled kernels in ``_kernels.pyx``."""
import numpy as np


def panel_sum(gamma, floor, lo, hi, gl_x, gl_w):
    """Gauss-Legendre sum of ``max(2 sin(t/2), floor)**gamma`` over panels ``[lo_i, hi_i]``."""
    lo = np.asarray(lo, dtype=float)[:, None]
    hi = np.asarray(hi, dtype=float)[:, None]
    half = 0.5 * (hi - lo)
    t = lo + half * (np.asarray(gl_x) + 1.0)
    d = np.maximum(2.0 * np.abs(np.sin(0.5 * t)), floor)
    return float(np.sum(half * (d ** gamma) @ np.asarray(gl_w)))


def radial_mean(coeffs, r, cos_t, sin_t, alpha, p):
    """``sum_j |f(z_j)|**p |z_j - 1|**(2 alpha)`` at ``z_j = r e^{i t_j}``, ``f = sum c_k z^k``."""
    z = r * (np.asarray(cos_t) + 1j * np.asarray(sin_t))
    f = np.polyval(np.asarray(coeffs)[::-1], z)
    terms = np.abs(f) ** p
    if alpha:
        terms = terms * np.abs(z - 1.0) ** (2.0 * alpha)
    return float(np.sum(terms))
