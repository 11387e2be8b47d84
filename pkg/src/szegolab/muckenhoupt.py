"""A_p quotients over arcs, regularised divergence scans and the boundedness interval.

For the weight family ``|g_alpha|**(2-p) = |z - 1|**(alpha (2-p))`` the
weighted projection is bounded on ``L^p(mu_alpha)`` exactly for
``(2a+1)/(a+1) < p < (2a+1)/a``.  The scans here read off how the A_p quotient
of the (clamped) weight diverges as the clamp shrinks.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

import numpy as np

from . import _backend
from .circle import TWO_PI
from .parallel import max_workers
from .weights import PowerWeight

GL_ORDER = 10
DEFAULT_SCAN_EPS = np.pi / 4
DEFAULT_DEPTH = 12
ENDPOINT_TOL = 1e-9


class Verdict(str, Enum):
    INSIDE = "Inside"
    BOUNDARY = "Boundary"
    OUTSIDE = "Outside"


@dataclass(frozen=True)
class Arc:
    """The arc ``(center - half_width, center + half_width)`` modulo 2pi."""

    center: float
    half_width: float

    def __post_init__(self):
        if not 0 < self.half_width <= np.pi:
            raise ValueError(f"half_width must lie in (0, pi], got {self.half_width}")
        object.__setattr__(self, "center", float(np.mod(self.center, TWO_PI)))

    @property
    def length(self) -> float:
        return 2.0 * self.half_width

    @property
    def bounds(self) -> tuple[float, float]:
        return self.center - self.half_width, self.center + self.half_width


@dataclass(frozen=True)
class ApVerdict:
    classification: Verdict
    q0: float
    p0: float


@dataclass
class ApScanReport:
    s: float
    p: float
    ladder: list = field(default_factory=list)  # (delta, quotient) pairs
    fitted_slope: float = float("nan")
    predicted_slope: float | None = None
    a: float = 0.0
    b: float = 0.0
    verdict: Verdict = Verdict.INSIDE
    alpha: float | None = None

    def matches(self, rel_tol: float = 0.05, abs_tol: float = 0.02) -> bool:
        """Fitted slope within tolerance of the prediction; endpoint scans always pass."""
        if self.verdict is Verdict.BOUNDARY or self.predicted_slope is None:
            return True
        if self.predicted_slope == 0:
            return abs(self.fitted_slope) <= abs_tol
        return abs(self.fitted_slope - self.predicted_slope) <= rel_tol * abs(self.predicted_slope)


@lru_cache(maxsize=None)
def _gauss_legendre(order: int):
    return np.polynomial.legendre.leggauss(order)


def _segments(lo: float, hi: float, delta: float):
    """Split ``[lo, hi]`` into pieces on which the distance to ``2pi Z`` is monotone.

    Yields ``(t_near, length, clamped)`` where ``t_near`` is the distance of the
    piece's nearer end to the closest multiple of 2pi.
    """
    cuts = {lo, hi}
    for k in range(math.floor(lo / np.pi) - 1, math.ceil(hi / np.pi) + 2):
        c = k * np.pi
        for x in (c, c - delta, c + delta) if k % 2 == 0 and delta > 0 else (c,):
            if lo < x < hi:
                cuts.add(x)
    edges = sorted(cuts)
    for u, v in zip(edges[:-1], edges[1:]):
        if v - u <= 0:
            continue
        mid = 0.5 * (u + v)
        centre = TWO_PI * round(mid / TWO_PI)
        t_u, t_v = abs(u - centre), abs(v - centre)
        t_near = min(t_u, t_v)
        # cuts sit at +-delta, so each piece lies wholly inside or outside the clamp
        clamped = delta > 0 and abs(mid - centre) < delta
        yield t_near, v - u, clamped


def power_integral(gamma: float, delta: float, lo: float, hi: float, resolution: int = 64) -> float:
    """``int_lo^hi max(|e^{it} - 1|, 2 sin(delta/2))**gamma dt`` for ``hi - lo <= 2pi``.

    Geometrically graded Gauss-Legendre panels resolve the algebraic
    singularity at multiples of 2pi.  Unclamped integrals with
    ``gamma <= -1`` over a singular point are rejected.
    """
    if hi < lo:
        raise ValueError("empty interval")
    floor = 2.0 * math.sin(delta / 2.0) if delta > 0 else 0.0
    gl_x, gl_w = _gauss_legendre(GL_ORDER)
    pieces = list(_segments(lo, hi, delta))
    per_piece = max(16, resolution // max(1, len(pieces)))
    total = 0.0
    los, his = [], []
    for t_near, length, clamped in pieces:
        if clamped:
            total += length * floor**gamma
            continue
        t_far = t_near + length
        if t_near == 0.0:
            if gamma <= -1:
                raise ValueError(
                    f"unclamped singular integrand (exponent {gamma} <= -1); supply delta > 0"
                )
            t_cut = t_far * 1e-15
            # chord(t) = t (1 + O(t^2)) on [0, t_cut]
            total += t_cut ** (gamma + 1) / (gamma + 1)
            edges = np.geomspace(t_cut, t_far, per_piece + 1)
        elif t_far / t_near > 4.0:
            edges = np.geomspace(t_near, t_far, per_piece + 1)
        else:
            edges = np.linspace(t_near, t_far, per_piece + 1)
        los.append(edges[:-1])
        his.append(edges[1:])
    if los:
        total += _backend.panel_sum(gamma, floor, np.concatenate(los), np.concatenate(his), gl_x, gl_w)
    return total


def arc_quotient(w: PowerWeight, p: float, arc: Arc, resolution: int = 64) -> float:
    """``(avg_I w) * (avg_I w**(-1/(p-1)))**(p-1)`` over the arc ``I``."""
    if p <= 1:
        raise ValueError("p must exceed 1")
    if resolution < 64:
        raise ValueError("resolution must be >= 64")
    lo, hi = arc.bounds
    first = power_integral(w.s, w.delta, lo, hi, resolution) / arc.length
    b = w.s / (1.0 - p)
    second = power_integral(b, w.delta, lo, hi, resolution) / arc.length
    q = first * second ** (p - 1.0)
    if not q >= 1.0 - 1e-6:
        raise ArithmeticError(f"A_p quotient {q} below 1: quadrature failure")
    return q


def dyadic_arcs(depth: int = DEFAULT_DEPTH) -> list[Arc]:
    """Centres ``2pi k / 2**m``, half-widths ``pi / 2**m`` for ``m = 1..depth``."""
    return [
        Arc(TWO_PI * k / 2**m, np.pi / 2**m) for m in range(1, depth + 1) for k in range(2**m)
    ]


def ap_supremum_estimate(w: PowerWeight, p: float, arc_family=None, resolution: int = 64) -> float:
    """Maximum A_p quotient over an arc family: a lower bound for the A_p constant."""
    if w.s == 0:
        return 1.0
    arcs = dyadic_arcs() if arc_family is None else arc_family
    return max(arc_quotient(w, p, arc, resolution) for arc in arcs)


def boundedness_interval(alpha: float) -> tuple[float, float]:
    """``((2a+1)/(a+1), (2a+1)/a)``; ``alpha = 0`` gives the limit ``(1, inf)``."""
    if alpha < 0:
        raise ValueError("alpha must be >= 0")
    q0 = (2 * alpha + 1) / (alpha + 1)
    p0 = math.inf if alpha == 0 else (2 * alpha + 1) / alpha
    return q0, p0


def classify(alpha: float, p: float, tol: float = ENDPOINT_TOL) -> ApVerdict:
    if p <= 1:
        raise ValueError("p must exceed 1")
    q0, p0 = boundedness_interval(alpha)
    if abs(p - q0) <= tol or (math.isfinite(p0) and abs(p - p0) <= tol):
        label = Verdict.BOUNDARY
    elif q0 < p < p0:
        label = Verdict.INSIDE
    else:
        label = Verdict.OUTSIDE
    return ApVerdict(label, q0, p0)


def scan_exponents(alpha: float, p: float) -> tuple[float, float]:
    """``a = alpha (2 - p)`` and ``b = a / (1 - p)``."""
    a = alpha * (2.0 - p)
    return a, a / (1.0 - p)


def predicted_slope(alpha: float, p: float, tol: float = ENDPOINT_TOL) -> float:
    """Asymptotic d log(quotient) / d log(delta) for the clamped symmetric-arc scan."""
    if p <= 1:
        raise ValueError("p must exceed 1")
    if classify(alpha, p, tol).classification is Verdict.BOUNDARY:
        raise ValueError(f"p = {p} is an endpoint for alpha = {alpha}: logarithmic regime")
    a, b = scan_exponents(alpha, p)
    return min(0.0, a + 1.0) + (p - 1.0) * min(0.0, b + 1.0)


def fit_slope(deltas, values, tail: int = 4) -> float:
    """Least-squares slope of ``log(values)`` against ``log(deltas)`` on the last ``tail`` points."""
    x = np.log(np.asarray(deltas, dtype=float)[-tail:])
    y = np.log(np.asarray(values, dtype=float)[-tail:])
    return float(np.polyfit(x, y, 1)[0])


def default_ladder() -> list[float]:
    return [2.0**-k for k in range(4, 15)]


def ap_scan(
    alpha: float,
    p: float,
    delta_ladder=None,
    resolution: int = 128,
    eps: float = DEFAULT_SCAN_EPS,
    workers: int | None = None,
) -> ApScanReport:
    """Quotient of the clamped weight on the arc ``(-eps, eps)`` along a shrinking clamp ladder."""

    ladder = default_ladder() if delta_ladder is None else [float(d) for d in delta_ladder]
    if len(ladder) < 4:
        raise ValueError("delta ladder needs at least 4 entries")
    if any(d1 <= d2 for d1, d2 in zip(ladder, ladder[1:])) or ladder[-1] <= 0:
        raise ValueError("delta ladder must be positive and strictly decreasing")
    a, b = scan_exponents(alpha, p)
    arc = Arc(0.0, eps)
    verdict = classify(alpha, p).classification

    def run(delta):
        return arc_quotient(PowerWeight(a, delta), p, arc, resolution)

    with ThreadPoolExecutor(workers or max_workers()) as pool:
        quotients = list(pool.map(run, ladder))
    slope = fit_slope(ladder, quotients)
    pred = None if verdict is Verdict.BOUNDARY else predicted_slope(alpha, p)
    return ApScanReport(
        s=a,
        p=p,
        ladder=list(zip(ladder, quotients)),
        fitted_slope=slope,
        predicted_slope=pred,
        a=a,
        b=b,
        verdict=verdict,
        alpha=alpha,
    )
