"""Weighted pairings, Hölder margins, self-adjointness and dual representatives."""
from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .circle import BoundarySamples, _check_same_grid, quad
from .norms import NormSpec, lp_norm
from .szego import ProjectedFunction, project_weighted
from .weights import PowerWeight, chord, g_alpha

# pairings are grid sums, so projections must be orthogonal for the grid inner product
DISCRETE = "discrete"


def pairing(f: BoundarySamples, h: BoundarySamples, alpha: float) -> complex:
    """``int f conj(h) |z - 1|**(2 alpha) dtheta``."""
    _check_same_grid(f, h)
    mu = chord(f.grid.nodes) ** (2 * alpha)
    return quad(BoundarySamples(f.grid, f.values * np.conj(h.values) * mu))


def hoelder_margin(f: BoundarySamples, h: BoundarySamples, alpha: float, p: float) -> float:
    """``||f||_{p,|z-1|^{alpha p}} ||h||_{q,|z-1|^{alpha q}} - |<f, h>|``; never negative."""
    if p <= 1:
        raise ValueError("p must exceed 1")
    q = p / (p - 1.0)
    nf = lp_norm(f, NormSpec(p, PowerWeight(alpha * p)))
    nh = lp_norm(h, NormSpec(q, PowerWeight(alpha * q)))
    return nf * nh - abs(pairing(f, h, alpha))


def _trace_values(fn: ProjectedFunction, grid, radius: float) -> np.ndarray:
    if radius == 1.0:
        return fn.trace(grid).values
    return fn(radius * grid.points)


def selfadjoint_residual(f: BoundarySamples, h: BoundarySamples, alpha: float, radius: float = 1.0) -> float:
    """``|<S_mu f, h>_mu - <f, S_mu h>_mu|`` with both projections on the discrete Fourier route.

    Projected functions are sampled on the circle of the given radius (the
    half-offset grid already avoids ``z = 1``, so ``radius = 1`` is usable).
    """
    _check_same_grid(f, h)
    grid = f.grid
    sf = BoundarySamples(grid, _trace_values(project_weighted(f, alpha, DISCRETE), grid, radius))
    sh = BoundarySamples(grid, _trace_values(project_weighted(h, alpha, DISCRETE), grid, radius))
    return abs(pairing(sf, h, alpha) - pairing(f, sh, alpha))


def dual_representative(h: BoundarySamples, alpha: float) -> ProjectedFunction:
    """``S_mu h``, which represents ``f -> <f, h>_mu`` on the weighted Hardy space."""
    return project_weighted(h, alpha, DISCRETE)


def random_test_function(grid, alpha: float, rng, degree: int = 16) -> BoundarySamples:
    """``sum_{n<=degree} c_n z**n / g_alpha(z)`` with Gaussian complex ``c_n``."""
    c = rng.standard_normal(degree + 1) + 1j * rng.standard_normal(degree + 1)
    z = grid.points
    return BoundarySamples(grid, np.polyval(c[::-1], z) / g_alpha(z, alpha))


@dataclass
class RepresentationReport:
    alpha: float
    p: float
    max_residual: float
    n_tests: int
    seed: int
    passed: bool
    normalization: str = "fixed"

    def to_dict(self) -> dict:
        d = asdict(self)
        d["pass"] = d.pop("passed")
        return d


def representation_check(
    h: BoundarySamples,
    alpha: float,
    p: float,
    n_tests: int = 32,
    seed: int = 0,
    normalization: str = "fixed",
    tol: float = 1e-6,
) -> RepresentationReport:
    """Max of ``|<f, h> - <f, S_mu h>| / ||f||`` over seeded holomorphic test functions.

    ``normalization="fixed"`` measures ``f`` in ``L^p(|z-1|^{2 alpha})``;
    ``"rescaled"`` in ``L^p(|z-1|^{alpha p})``.  The pairing weight is
    ``|z-1|^{2 alpha}`` in both cases.
    """
    if p <= 1:
        raise ValueError("p must exceed 1")
    if normalization == "fixed":
        spec = NormSpec(p, PowerWeight(2 * alpha))
    elif normalization == "rescaled":
        spec = NormSpec(p, PowerWeight(alpha * p))
    else:
        raise ValueError(f"unknown normalization {normalization!r}")
    grid = h.grid
    rep = dual_representative(h, alpha).trace(grid)
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n_tests):
        f = random_test_function(grid, alpha, rng)
        resid = abs(pairing(f, h, alpha) - pairing(f, rep, alpha)) / lp_norm(f, spec)
        worst = max(worst, resid)
    return RepresentationReport(alpha, p, worst, n_tests, seed, worst <= tol, normalization)
