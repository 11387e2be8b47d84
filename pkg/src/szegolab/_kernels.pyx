# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops: panel quadrature of clamped power weights, fused radial means."""
from libc.math cimport sin, fabs, pow, exp, log


def panel_sum(double gamma, double floor, const double[::1] lo, const double[::1] hi,
              const double[::1] gl_x, const double[::1] gl_w):
    cdef Py_ssize_t i, j, n = lo.shape[0], m = gl_x.shape[0]
    cdef double half, t, d, acc, total = 0.0
    if hi.shape[0] != n or gl_w.shape[0] != m:
        raise ValueError("shape mismatch")
    with nogil:
        for i in range(n):
            half = 0.5 * (hi[i] - lo[i])
            acc = 0.0
            for j in range(m):
                t = lo[i] + half * (gl_x[j] + 1.0)
                d = 2.0 * fabs(sin(0.5 * t))
                if d < floor:
                    d = floor
                acc += gl_w[j] * pow(d, gamma)
            total += half * acc
    return total


def radial_mean(const double complex[::1] coeffs, double r, const double[::1] cos_t,
                const double[::1] sin_t, double alpha, double p):
    # Horner at r e^{it}, then |f|^p |z - 1|^{2 alpha}, one pass, no temporaries
    cdef Py_ssize_t j, k, d = coeffs.shape[0], n = cos_t.shape[0]
    cdef double x, y, fr, fi, tr, m2, total = 0.0, h = 0.5 * p
    if sin_t.shape[0] != n or d == 0:
        raise ValueError("shape mismatch")
    with nogil:
        for j in range(n):
            x = r * cos_t[j]
            y = r * sin_t[j]
            fr = coeffs[d - 1].real
            fi = coeffs[d - 1].imag
            for k in range(d - 2, -1, -1):
                tr = fr * x - fi * y + coeffs[k].real
                fi = fr * y + fi * x + coeffs[k].imag
                fr = tr
            m2 = fr * fr + fi * fi
            if m2 == 0.0:
                continue
            if alpha != 0.0:
                total += exp(h * log(m2) + alpha * log((x - 1.0) * (x - 1.0) + y * y))
            elif h == 1.0:
                total += m2
            else:
                total += exp(h * log(m2))
    return total
