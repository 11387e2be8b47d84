"""Weighted L^p and Hardy norms, operator-norm lower bounds and blow-up scans."""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from . import _backend
from .circle import BoundarySamples, CircleGrid, FourierCoeffs, idft, make_grid
from .parallel import max_workers
from .szego import riesz_samples
from .weights import PowerWeight, branch_log, chord

RADIAL_SLACK = 1e-9
GROWTH_FACTOR = 2.0
STABLE_VARIATION = 0.10
DIP_TOLERANCE = 0.05
FUSED_MAX_DEGREE = 64  # Horner beats the FFT route below this degree


@dataclass(frozen=True)
class NormSpec:
    p: float
    weight: PowerWeight = PowerWeight(0.0)

    def __post_init__(self):
        if not self.p >= 1:
            raise ValueError("p must be >= 1")


def lp_norm(f: BoundarySamples, spec: NormSpec) -> float:
    """``(int |f|**p * weight dtheta)**(1/p)`` on the grid."""
    w = spec.weight.on(f.grid)
    return float(f.grid.spacing * np.dot(np.abs(f.values) ** spec.p, w)) ** (1.0 / spec.p)


def default_radii() -> list[float]:
    return [1.0 - 2.0**-k for k in range(1, 11)]


def radial_means(c: FourierCoeffs, alpha: float, p: float, radii) -> np.ndarray:
    """``int |f(r e^{it}) g(r e^{it})**(2/p)|**p dt`` for each radius."""
    if c.min_mode < 0:
        raise ValueError("hardy_norm needs holomorphic coefficients")
    radii = np.asarray(radii, dtype=float)
    if radii.size == 0 or np.any(np.diff(radii) <= 0) or radii[0] < 0 or radii[-1] >= 1:
        raise ValueError("radii must be strictly increasing in [0, 1)")
    # trapezoid on a circle of radius r converges like r_sing**N with r_sing ~ 1 - r
    n = max(1024, 4 * (c.max_mode + 1), 2 ** math.ceil(math.log2(40.0 / (1.0 - radii[-1]))))
    grid = make_grid(int(n))
    out = np.empty(radii.size)
    if c.max_mode <= FUSED_MAX_DEGREE:
        # |g**(2/p)|**p = |z - 1|**(2 alpha) exactly, so the fused kernel uses the modulus
        full = np.array([c[k] for k in range(c.max_mode + 1)], dtype=complex)
        cos_t, sin_t = np.cos(grid.nodes), np.sin(grid.nodes)
        for i, r in enumerate(radii):
            out[i] = grid.spacing * _backend.radial_mean(full, r, cos_t, sin_t, alpha, p)
        return out
    for i, r in enumerate(radii):
        scaled = FourierCoeffs(c.min_mode, c.coeffs * r ** c.modes)
        f = idft(scaled, grid).values
        z = r * grid.points
        gp = np.exp((2.0 * alpha / p) * branch_log(z - 1)) if alpha else np.ones_like(z)
        out[i] = grid.spacing * np.sum(np.abs(f * gp) ** p)
    return out


def hardy_norm(c: FourierCoeffs, alpha: float, p: float, radii=None) -> float:
    """``sup_r (int |f g^{2/p}|**p dtheta)**(1/p)`` over the radii ladder."""
    radii = default_radii() if radii is None else radii
    means = radial_means(c, alpha, p, radii)
    drops = means[:-1] - means[1:]
    if np.any(drops > RADIAL_SLACK * np.maximum(means[:-1], 1.0)):
        raise ArithmeticError("radial means decrease: input is not holomorphic or under-resolved")
    return float(np.max(means) ** (1.0 / p))


class _RatioProblem:
    """``||S_mu f||_{p,mu} / ||f||_{p,mu}`` on a grid, evaluated in the variable ``F = f g``.

    Since ``g S_mu f = S(f g)`` and ``|f|^p mu = |f g|^p |g|^(2-p)``, the ratio
    equals ``||S F||_{p,omega} / ||F||_{p,omega}`` with ``omega = |z-1|^{alpha(2-p)}``
    sample for sample.
    """

    def __init__(self, alpha: float, p: float, grid: CircleGrid):
        self.p = p
        self.grid = grid
        self.omega = chord(grid.nodes) ** (alpha * (2.0 - p))

    def norm(self, values) -> float:
        return float(np.dot(np.abs(values) ** self.p, self.omega)) ** (1.0 / self.p)

    def ratio(self, values) -> float:
        den = self.norm(values)
        if den == 0:
            return 0.0
        return self.norm(riesz_samples(values)) / den


def _signed_distance(theta):
    return np.angle(np.exp(1j * theta))


def extremal_candidates(alpha: float, p: float, grid: CircleGrid) -> list[np.ndarray]:
    """The A_p test functions ``chi_I * omega**(1/(1-p))`` (in the ``F = f g`` variable).

    Arcs shrink dyadically towards ``theta = 0`` down to the grid spacing; both
    arcs containing the singular point and arcs beside it are included.
    """
    t = _signed_distance(grid.nodes)
    sigma = chord(grid.nodes) ** (alpha * (2.0 - p) / (1.0 - p))
    out = []
    eps = np.pi
    while eps >= grid.spacing:
        for lo, hi in ((-eps, eps), (0.0, eps), (eps / 2, eps), (-eps, -eps / 2)):
            mask = (t > lo) & (t < hi)
            if mask.any():
                out.append(np.where(mask, sigma, 0.0).astype(complex))
        eps /= 2
    return out


def _power_refine(prob: "_RatioProblem", start: np.ndarray, steps: int):
    """Nonlinear power iteration for ``max ||A x||_p / ||x||_p`` with ``A = D P D^{-1}``.

    ``D = omega**(1/p)`` turns the weighted problem into an unweighted one; the
    iteration alternates the duality maps of ``l^p`` and ``l^q`` (Boyd's
    method).  Returns the best ratio seen, so more steps never lower it.
    """
    p = prob.p
    q = p / (p - 1.0)
    d = prob.omega ** (1.0 / p)
    x = start * d
    best = prob.ratio(start)
    for _ in range(steps):
        y = d * riesz_samples(x / d)
        z = riesz_samples(np.abs(y) ** (p - 1.0) * np.exp(1j * np.angle(y)) * d) / d
        x = np.abs(z) ** (q - 1.0) * np.exp(1j * np.angle(z))
        scale = np.max(np.abs(x))
        if scale == 0:
            break
        x /= scale
        best = max(best, prob.ratio(x / d))
    return best


def op_norm_lower_bound(
    alpha: float,
    p: float,
    n_points: int,
    budget: int = 100,
    seed: int = 0,
    degree: int = 8,
    n_random: int = 8,
    n_refine: int = 3,
) -> float:
    """Largest ``||S_mu f||_{p,mu} / ||f||_{p,mu}`` found over a candidate set on the grid.

    Candidates: a holomorphic witness (ratio 1), the A_p extremal family and
    ``n_random`` seeded random trigonometric polynomials.  The ``n_refine``
    best are refined by ``budget`` steps of nonlinear power iteration.  Every
    value is attained by an explicit grid function, so the result is a lower
    bound for the discretised operator norm; it is nondecreasing in
    ``budget``.
    """
    if p <= 1:
        raise ValueError("p must exceed 1")
    grid = make_grid(n_points)
    prob = _RatioProblem(alpha, p, grid)
    rng = np.random.default_rng(seed)
    theta = grid.nodes
    modes = np.arange(-degree, degree + 1)
    candidates = [np.exp(1j * theta)]  # F = z: S F = F
    candidates += extremal_candidates(alpha, p, grid)
    for _ in range(n_random):
        a = rng.standard_normal(modes.size) + 1j * rng.standard_normal(modes.size)
        candidates.append(np.exp(1j * np.outer(theta, modes)) @ a)
    with ThreadPoolExecutor(max_workers()) as pool:
        ratios = list(pool.map(prob.ratio, candidates))
        # stable sort: ties resolved towards the lowest candidate index
        order = np.argsort(-np.asarray(ratios), kind="stable")[:n_refine]
        refined = list(pool.map(lambda i: _power_refine(prob, candidates[i], budget), order))
    return float(max(max(ratios), max(refined)))


class BlowupVerdict(str, Enum):
    STABLE = "Stable"
    GROWING = "Growing"
    INCONCLUSIVE = "Inconclusive"


@dataclass
class BlowupReport:
    alpha: float
    p: float
    grid_sizes: list = field(default_factory=list)
    estimates: list = field(default_factory=list)
    verdict: BlowupVerdict | None = None  # judged from the estimates when omitted

    def __post_init__(self):
        if len(self.grid_sizes) != len(self.estimates) or len(self.estimates) < 2:
            raise ValueError("need matching grid sizes and at least two estimates")
        if self.verdict is None:
            self.verdict = judge(self.estimates)

    @property
    def growth(self) -> float:
        return self.estimates[-1] / self.estimates[0]

    @property
    def variation(self) -> float:
        e = np.asarray(self.estimates)
        return float(np.sum(np.abs(np.diff(e))) / np.mean(e))


def judge(estimates) -> BlowupVerdict:
    e = np.asarray(estimates, dtype=float)
    monotone = np.all(e[1:] >= (1.0 - DIP_TOLERANCE) * e[:-1])
    if e[-1] / e[0] >= GROWTH_FACTOR and monotone:
        return BlowupVerdict.GROWING
    if np.sum(np.abs(np.diff(e))) <= STABLE_VARIATION * np.mean(e):
        return BlowupVerdict.STABLE
    return BlowupVerdict.INCONCLUSIVE


def blowup_scan(alpha: float, p: float, grid_sizes=None, budget: int = 100, seed: int = 0) -> BlowupReport:
    sizes = [2**k for k in range(9, 13)] if grid_sizes is None else list(grid_sizes)
    if any(a >= b for a, b in zip(sizes, sizes[1:])):
        raise ValueError("grid sizes must be increasing")
    estimates = [op_norm_lower_bound(alpha, p, n, budget, seed) for n in sizes]
    return BlowupReport(alpha, p, sizes, estimates)
