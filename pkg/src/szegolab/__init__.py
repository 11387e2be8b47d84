"""Numerical laboratory for Szegő projections weighted by |z - 1|^(2 alpha) on the unit circle."""
from ._backend import BACKEND
from .circle import (
    TWO_PI, BoundarySamples, CircleGrid, FourierCoeffs, dft, eval_analytic_at, idft, make_grid, quad,
)
from .duality import (
    RepresentationReport, dual_representative, hoelder_margin, pairing, representation_check,
    selfadjoint_residual,
)
from .muckenhoupt import (
    ApScanReport, ApVerdict, Arc, Verdict, ap_scan, ap_supremum_estimate, arc_quotient,
    boundedness_interval, classify, predicted_slope, scan_exponents,
)
from .norms import (
    BlowupReport, BlowupVerdict, NormSpec, blowup_scan, hardy_norm, lp_norm, op_norm_lower_bound,
    radial_means,
)
from .szego import (
    GramSystem, ProjectedFunction, WeightedKernelEval, project_weighted, project_weighted_quadrature,
    rescaled_project, rescaled_transform, riesz_project, szego_kernel, weighted_kernel,
    weighted_kernel_via_moments,
)
from .weights import (
    PowerWeight, branch_log, g_alpha, g_alpha_taylor, moment, moment_closed_form, moments, mu_alpha,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
