"""Szegő and weighted Szegő projections on the circle.

Two routes are kept deliberately independent:

* Fourier route: ``g S_mu f = S(f g)`` with ``S`` the Riesz projection
  (Fourier truncation to non-negative modes).
* Kernel route: quadrature of ``S_mu(z, w) f(w) mu(w)`` with the closed-form
  kernel, and a Gram/moment-matrix kernel built from weighted monomial inner
  products.

Kernels carry the ``1/(2pi)`` from the orthonormal basis ``z**n/sqrt(2pi)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg
from scipy.signal import fftconvolve

from .circle import (
    TWO_PI,
    BoundarySamples,
    CircleGrid,
    FourierCoeffs,
    dft,
    eval_analytic_at,
    idft,
)
from .weights import chord, g_alpha, g_alpha_taylor, moment_closed_form, moments

MAX_EVAL_RADIUS = 0.9
MAX_GRAM_CONDITION = 1e12


def riesz_project(c: FourierCoeffs) -> FourierCoeffs:
    """Zero every negative mode; non-negative modes are unchanged."""
    out = np.array(c.coeffs)
    out[c.modes < 0] = 0
    return FourierCoeffs(c.min_mode, out)


def szego_kernel(z, w):
    """``1 / (2pi (1 - z conj(w)))``, the Szegő kernel of the disc."""
    zw = np.asarray(z, dtype=complex) * np.conj(np.asarray(w, dtype=complex))
    if np.any(np.abs(zw) >= 1):
        raise ValueError("szego_kernel requires |z conj(w)| < 1")
    out = 1.0 / (TWO_PI * (1.0 - zw))
    return complex(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class WeightedKernelEval:
    alpha: float
    z: complex
    w: complex
    value: complex


def _weighted_kernel_value(z, w, alpha):
    return szego_kernel(z, w) / (g_alpha(z, alpha) * np.conj(g_alpha(w, alpha)))


def weighted_kernel(z, w, alpha: float) -> WeightedKernelEval:
    """``S_mu(z, w) = S(z, w) / (g(z) conj(g(w)))`` for ``mu = |z - 1|**(2 alpha)``."""
    if z == 1 or w == 1:
        raise ValueError("weighted kernel undefined at z = 1 or w = 1")
    value = complex(_weighted_kernel_value(complex(z), complex(w), alpha))
    return WeightedKernelEval(alpha, complex(z), complex(w), value)


@dataclass(frozen=True)
class GramSystem:
    """Toeplitz Gram matrix ``G[n, m] = <z**n, z**m>_mu = m_{n-m}(alpha)``."""

    alpha: float
    matrix: np.ndarray = field(repr=False)
    condition: float = float("nan")
    _factor: tuple = field(default=None, repr=False, compare=False)

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]

    @classmethod
    def build(cls, alpha: float, dimension: int, grid: CircleGrid | None = None) -> "GramSystem":
        """Gram system from closed-form moments, or quadrature moments on ``grid``."""
        if dimension < 1:
            raise ValueError("dimension must be positive")
        if grid is None:
            col = moment_closed_form(np.arange(dimension), alpha)
        else:
            col = moments(dimension - 1, alpha, grid)[dimension - 1 :]
        matrix = scipy.linalg.toeplitz(col)
        cond = float(np.linalg.cond(matrix))
        if not np.isfinite(cond) or cond > MAX_GRAM_CONDITION:
            raise np.linalg.LinAlgError(
                f"Gram matrix condition number {cond:.3e} exceeds {MAX_GRAM_CONDITION:.0e}"
            )
        try:
            factor = scipy.linalg.cho_factor(matrix, lower=True)
        except np.linalg.LinAlgError as err:
            raise np.linalg.LinAlgError(
                "Gram matrix is not positive definite (inaccurate moments?)"
            ) from err
        return cls(alpha, matrix, cond, factor)

    def kernel(self, z, w) -> complex:
        n = np.arange(self.dimension)
        vz = np.asarray(z, dtype=complex) ** n
        vw = np.conj(np.asarray(w, dtype=complex) ** n)
        return complex(vz @ scipy.linalg.cho_solve(self._factor, vw))


def weighted_kernel_via_moments(gram: GramSystem, z, w) -> complex:
    """``v(z)^T G^{-1} conj(v(w))``: reproducing kernel of polynomials of degree < N."""
    if max(abs(z), abs(w)) > MAX_EVAL_RADIUS:
        raise ValueError(f"moment kernel evaluated only for |z|, |w| <= {MAX_EVAL_RADIUS}")
    return gram.kernel(z, w)


@dataclass(frozen=True)
class ProjectedFunction:
    """A function of the form ``h(z) / g_alpha(z)`` with ``h`` a power series.

    This is how weighted projections are represented: ``coeffs`` are the
    power-series coefficients of ``h = S(f g)``.
    """

    alpha: float
    coeffs: FourierCoeffs

    def __call__(self, z):
        return eval_analytic_at(self.coeffs, z) / g_alpha(z, self.alpha)

    def trace(self, grid: CircleGrid) -> BoundarySamples:
        h = idft(self.coeffs, grid).values
        return BoundarySamples(grid, h / g_alpha(grid.points, self.alpha))


def _max_resolved_mode(n_points: int) -> int:
    return (n_points - 1) // 2


def is_band_limited(f: BoundarySamples, rel_tol: float = 1e-13) -> bool:
    """True when all DFT modes with ``|k| > N/4`` are negligible."""
    n = f.grid.n_points
    spectrum = np.abs(np.fft.fft(f.values))
    k = np.abs(np.fft.fftfreq(n, 1.0 / n))
    top = spectrum.max(initial=0.0)
    return top == 0 or spectrum[k > n // 4].max(initial=0.0) <= rel_tol * top


def project_weighted(f: BoundarySamples, alpha: float, method: str = "auto") -> ProjectedFunction:
    """Weighted Szegő projection of ``f`` via ``g S_mu f = S(f g)``.

    ``method="discrete"`` multiplies samples by ``g`` and truncates the DFT: the
    exact orthogonal projection for the discrete inner product
    ``sum f conj(h) mu (2pi/N)``.  ``method="series"`` forms ``f g`` from the
    DFT of ``f`` and the Taylor coefficients of ``g``, so band-limited inputs
    suffer no aliasing from the ``|theta|**alpha`` kink of ``g`` (and
    polynomials are reproduced exactly).  ``"auto"`` uses the series route for
    band-limited inputs and the discrete route otherwise; both keep modes
    ``0 .. (N-1)//2``, so the trace of an ``auto`` result is projected back
    onto itself exactly.
    """
    if not np.all(np.isfinite(f.values)):
        raise ValueError("input samples must be finite")
    grid = f.grid
    if grid.n_points < 4:
        raise ValueError("grid too coarse for projection")
    if method == "auto":
        method = "series" if is_band_limited(f) else "discrete"
    m = _max_resolved_mode(grid.n_points)
    if method == "discrete":
        fg = f * g_alpha(grid.points, alpha)
        h = riesz_project(dft(fg, m)).coeffs[m:]
    elif method == "series":
        c = dft(f, m).coeffs
        # mode j of the product sits at index j + m of the full convolution
        h = fftconvolve(c, g_alpha_taylor(alpha, 2 * m + 1))[m : 2 * m + 1]
    else:
        raise ValueError(f"unknown method {method!r}")
    return ProjectedFunction(alpha, FourierCoeffs(0, h))


def riesz_samples(values: np.ndarray) -> np.ndarray:
    """Discrete Riesz projection on half-offset samples: keep DFT modes ``0 .. N/2 - 1``.

    The phase factor of the half-offset grid only rotates each bin, so the
    truncation can be applied directly to the FFT bins.  It is an orthogonal
    projection of ``C^N``.
    """
    n = values.shape[-1]
    spectrum = np.fft.fft(values, axis=-1)
    spectrum[..., _max_resolved_mode(n) + 1 :] = 0
    return np.fft.ifft(spectrum, axis=-1)


def weighted_projection_samples(values: np.ndarray, alpha: float, grid: CircleGrid) -> np.ndarray:
    """Sample-level ``S_mu``: ``riesz(f g) / g`` at the grid nodes."""
    g = g_alpha(grid.points, alpha)
    return riesz_samples(np.asarray(values) * g) / g


def _check_eval_points(eval_points, grid: CircleGrid) -> np.ndarray:
    z = np.atleast_1d(np.asarray(eval_points, dtype=complex))
    r = float(np.max(np.abs(z)))
    if r > MAX_EVAL_RADIUS:
        raise ValueError(f"eval point too close to the circle (|z| = {r:.4f} > {MAX_EVAL_RADIUS})")
    if grid.n_points < 50.0 / (1.0 - r):
        raise ValueError(f"{grid.n_points} nodes cannot resolve the kernel at |z| = {r:.4f}")
    return z


def project_weighted_quadrature(f: BoundarySamples, alpha: float, eval_points) -> np.ndarray:
    """``int S_mu(z, w) f(w) mu(w) dtheta`` by trapezoidal quadrature at interior points."""
    grid = f.grid
    z = _check_eval_points(eval_points, grid)
    w = grid.points
    kern = _weighted_kernel_value(z[:, None], w[None, :], alpha)
    mu = chord(grid.nodes) ** (2 * alpha)
    return grid.spacing * (kern @ (f.values * mu))


def rescaled_transform(f: BoundarySamples, alpha: float, variant: str = "corrected") -> BoundarySamples:
    """``f~ = f g_alpha`` (corrected) or ``f |w-1|^{2 alpha} / g_alpha`` (as printed)."""
    g = g_alpha(f.grid.points, alpha)
    if variant == "corrected":
        return f * g
    if variant == "literal":
        return f * (chord(f.grid.nodes) ** (2 * alpha) / g)
    raise ValueError(f"unknown variant {variant!r}")


def rescaled_project(
    f: BoundarySamples, alpha: float, p: float, eval_points, variant: str = "corrected"
) -> np.ndarray:
    """``S(f~)(z) / (z - 1)**alpha`` with the unweighted kernel.

    ``p`` only fixes the measure ``|z-1|**(alpha p)`` in which the operator is
    bounded; the values do not depend on it.  The literal variant does not fix
    holomorphic functions and is kept for comparison.
    """
    if p <= 1:
        raise ValueError("p must exceed 1")
    grid = f.grid
    z = _check_eval_points(eval_points, grid)
    ft = rescaled_transform(f, alpha, variant)
    s = grid.spacing * (szego_kernel(z[:, None], grid.points[None, :]) @ ft.values)
    return s / g_alpha(z, alpha)
