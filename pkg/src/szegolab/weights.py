"""The branch power ``g_alpha(z) = (z - 1)**alpha`` and power weights ``|z - 1|**s``.

The logarithm uses ``arg in (0, 2pi)`` with the cut on the positive real axis.
For ``z`` in the closed disc ``z - 1`` has argument in ``[pi/2, 3pi/2]``, so
``g_alpha`` is continuous on the closed disc minus ``{1}``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import binom, gamma, rgamma

from .circle import TWO_PI, BoundarySamples, CircleGrid, dft, quad


def branch_log(z):
    """Logarithm with ``arg(z)`` in ``(0, 2pi)``; rejects the non-negative real axis."""
    z_arr = np.asarray(z, dtype=complex)
    if np.any((z_arr.imag == 0) & (z_arr.real >= 0)):
        raise ValueError("branch_log: argument on the cut [0, +inf)")
    arg = np.mod(np.angle(z_arr), TWO_PI)
    out = np.log(np.abs(z_arr)) + 1j * arg
    return complex(out) if out.ndim == 0 else out


def _is_integer(alpha: float) -> bool:
    return float(alpha).is_integer()


def g_alpha(z, alpha: float):
    """``(z - 1)**alpha`` on the fixed branch; integer exponents use exact powers."""
    if alpha < 0:
        raise ValueError("alpha must be >= 0")
    z_arr = np.asarray(z, dtype=complex)
    if alpha == 0:
        out = np.ones_like(z_arr)
    else:
        if np.any(z_arr == 1):
            raise ValueError("g_alpha is not invertible at z = 1")
        if _is_integer(alpha):
            out = (z_arr - 1) ** int(alpha)
        else:
            out = np.exp(alpha * branch_log(z_arr - 1))
    return complex(out) if out.ndim == 0 else out


def g_alpha_taylor(alpha: float, n_terms: int) -> np.ndarray:
    """Taylor coefficients of ``g_alpha`` at 0: ``exp(i pi alpha) binom(alpha, n) (-1)**n``."""
    n = np.arange(n_terms)
    return np.exp(1j * np.pi * alpha) * binom(alpha, n) * (-1.0) ** n


def chord(theta):
    """``|exp(i theta) - 1| = 2 |sin(theta/2)|``."""
    return 2.0 * np.abs(np.sin(np.asarray(theta, dtype=float) / 2.0))


@dataclass(frozen=True)
class PowerWeight:
    """``omega(theta) = max(|exp(i theta) - 1|, floor)**s`` with ``floor = 2 sin(delta/2)``.

    ``delta = 0`` leaves the weight unregularised.  ``s = 2 alpha`` gives
    ``mu_alpha``; ``s = alpha (2 - p)`` the A_p test weight.
    """

    s: float
    delta: float = 0.0

    def __post_init__(self):
        if not np.isfinite(self.s):
            raise ValueError("weight exponent must be finite")
        if self.delta < 0:
            raise ValueError("clamp delta must be >= 0")

    @property
    def floor(self) -> float:
        return chord(self.delta) if self.delta > 0 else 0.0

    def dual(self, p: float) -> "PowerWeight":
        """``omega**(1/(1-p))``, the second factor in the A_p quotient."""
        return PowerWeight(self.s / (1.0 - p), self.delta)

    def __call__(self, theta):
        return weight_value(self, theta)

    def on(self, grid: CircleGrid) -> np.ndarray:
        return weight_value(self, grid.nodes)


def weight_value(w: PowerWeight, theta):
    d = chord(theta)
    if w.delta > 0:
        d = np.maximum(d, w.floor)
    elif w.s < 0 and np.any(d == 0):
        raise ValueError("unclamped power weight with negative exponent evaluated at theta = 0")
    out = d ** w.s
    return float(out) if np.ndim(out) == 0 else out


def mu_alpha(alpha: float) -> PowerWeight:
    return PowerWeight(2.0 * alpha)


def moment(k: int, alpha: float, grid: CircleGrid) -> float:
    """``m_k(alpha) = int exp(i k theta) mu_alpha(theta) dtheta`` by trapezoidal quadrature."""
    theta = grid.nodes
    val = quad(BoundarySamples(grid, np.exp(1j * k * theta) * chord(theta) ** (2 * alpha)))
    if abs(val.imag) > 1e-10:
        raise ArithmeticError(f"moment m_{k} has imaginary part {val.imag:.3e}")
    return val.real


def moments(max_k: int, alpha: float, grid: CircleGrid) -> np.ndarray:
    """All quadrature moments ``m_{-K} .. m_K`` in one FFT."""
    samples = BoundarySamples(grid, chord(grid.nodes) ** (2 * alpha))
    c = dft(samples, max_k)
    # m_k = 2pi c_{-k}
    vals = TWO_PI * c.coeffs[::-1]
    if np.max(np.abs(vals.imag)) > 1e-10:
        raise ArithmeticError("quadrature moments have non-negligible imaginary part")
    return vals.real


def moment_closed_form(k, alpha: float):
    """``2pi (-1)**k Gamma(2a+1) / (Gamma(a+k+1) Gamma(a-k+1))`` with ``1/Gamma(-n) = 0``."""
    k = np.asarray(k)
    out = TWO_PI * (-1.0) ** k * gamma(2 * alpha + 1) * rgamma(alpha + k + 1) * rgamma(alpha - k + 1)
    return float(out) if out.ndim == 0 else out
