"""Grids, trapezoidal quadrature and Fourier analysis on the unit circle.

Nodes sit at the half-offset angles ``2*pi*(j + 1/2)/N`` so that the point
``z = 1`` (``theta = 0``), where every weight in this package degenerates, is
never sampled.

Fourier convention: ``c_k = (1/2pi) * int f(theta) exp(-i k theta) dtheta`` and
``f(theta) = sum_k c_k exp(i k theta)``.  The orthonormal basis of H^2 under
``dtheta`` is then ``e_n(z) = z**n / sqrt(2pi)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class CircleGrid:
    """Uniform half-offset sample points on the unit circle."""

    n_points: int

    def __post_init__(self):
        if int(self.n_points) != self.n_points or self.n_points < 2:
            raise ValueError(f"n_points must be an integer >= 2, got {self.n_points!r}")

    @cached_property
    def nodes(self) -> np.ndarray:
        j = np.arange(self.n_points)
        return TWO_PI * (j + 0.5) / self.n_points

    @cached_property
    def points(self) -> np.ndarray:
        return np.exp(1j * self.nodes)

    @property
    def spacing(self) -> float:
        return TWO_PI / self.n_points

    def samples(self, func) -> "BoundarySamples":
        """Sample ``func(theta)`` at the nodes."""
        return BoundarySamples(self, np.asarray(func(self.nodes), dtype=complex))


@dataclass(frozen=True)
class BoundarySamples:
    """A circle function in value space: one complex value per grid node."""

    grid: CircleGrid
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        values = np.asarray(self.values, dtype=complex)
        if values.shape != (self.grid.n_points,):
            raise ValueError(
                f"expected {self.grid.n_points} values, got shape {values.shape}"
            )
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    def __mul__(self, other):
        if isinstance(other, BoundarySamples):
            _check_same_grid(self, other)
            other = other.values
        return BoundarySamples(self.grid, self.values * other)

    __rmul__ = __mul__

    def __add__(self, other):
        if isinstance(other, BoundarySamples):
            _check_same_grid(self, other)
            other = other.values
        return BoundarySamples(self.grid, self.values + other)

    def conj(self) -> "BoundarySamples":
        return BoundarySamples(self.grid, self.values.conj())


def _check_same_grid(a: BoundarySamples, b: BoundarySamples):
    if a.grid.n_points != b.grid.n_points:
        raise ValueError(
            f"grid mismatch: {a.grid.n_points} vs {b.grid.n_points} points"
        )


@dataclass(frozen=True)
class FourierCoeffs:
    """Coefficients ``c_k`` for consecutive modes ``min_mode .. max_mode``."""

    min_mode: int
    coeffs: np.ndarray = field(repr=False)

    def __post_init__(self):
        coeffs = np.atleast_1d(np.asarray(self.coeffs, dtype=complex))
        if coeffs.ndim != 1 or coeffs.size == 0:
            raise ValueError("coeffs must be a non-empty 1-d array")
        coeffs.setflags(write=False)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "min_mode", int(self.min_mode))

    @property
    def max_mode(self) -> int:
        return self.min_mode + self.coeffs.size - 1

    @property
    def modes(self) -> np.ndarray:
        return np.arange(self.min_mode, self.max_mode + 1)

    def __getitem__(self, k: int) -> complex:
        """Coefficient of mode ``k``; zero outside the stored range."""
        if self.min_mode <= k <= self.max_mode:
            return complex(self.coeffs[k - self.min_mode])
        return 0.0j

    @classmethod
    def from_dict(cls, coeffs: dict) -> "FourierCoeffs":
        lo, hi = min(coeffs), max(coeffs)
        arr = np.zeros(hi - lo + 1, dtype=complex)
        for k, v in coeffs.items():
            arr[k - lo] = v
        return cls(lo, arr)


def make_grid(n_points: int) -> CircleGrid:
    return CircleGrid(n_points)


def quad(f: BoundarySamples) -> complex:
    """Periodic trapezoidal rule; exact for trigonometric polynomials of degree < N."""
    return complex(f.grid.spacing * np.sum(f.values))


def _half_offset_phase(modes, n_points):
    # exp(-i k theta_j) = exp(-i pi k / N) * exp(-2 pi i k j / N)
    return np.exp(-1j * np.pi * modes / n_points)


def dft(f: BoundarySamples, max_abs_mode: int) -> FourierCoeffs:
    """Coefficients ``c_k`` for ``|k| <= max_abs_mode`` via FFT with half-offset phase correction."""
    n = f.grid.n_points
    if max_abs_mode < 0 or n <= 2 * max_abs_mode:
        raise ValueError(
            f"grid of {n} points cannot resolve modes up to |k| = {max_abs_mode}"
        )
    spectrum = np.fft.fft(f.values) / n
    modes = np.arange(-max_abs_mode, max_abs_mode + 1)
    return FourierCoeffs(-max_abs_mode, spectrum[modes % n] * _half_offset_phase(modes, n))


def idft(c: FourierCoeffs, grid: CircleGrid) -> BoundarySamples:
    """Evaluate ``sum_k c_k exp(i k theta)`` at the grid nodes (exact for any mode range)."""
    n = grid.n_points
    modes = c.modes
    binned = np.zeros(n, dtype=complex)
    np.add.at(binned, modes % n, c.coeffs * np.conj(_half_offset_phase(modes, n)))
    return BoundarySamples(grid, np.fft.ifft(binned) * n)


def eval_analytic_at(c: FourierCoeffs, z):
    """Evaluate the power series ``sum_{k>=0} c_k z**k`` at interior point(s) ``z``."""
    if c.min_mode < 0:
        raise ValueError("negative modes present; not a holomorphic coefficient set")
    z_arr = np.asarray(z, dtype=complex)
    if np.any(np.abs(z_arr) >= 1.0):
        raise ValueError("evaluation requires |z| < 1")
    # leading zeros for modes 0 .. min_mode-1, then Horner
    poly = np.concatenate([np.zeros(c.min_mode, dtype=complex), c.coeffs])
    out = np.polyval(poly[::-1], z_arr)
    return complex(out) if out.ndim == 0 else out
