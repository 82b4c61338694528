"""focklab: weighted entire-function norms, Gaussian-kernel distances, and
radial-derivative characterizations, with verification suites for every
identity and bound the package computes.
"""

__version__ = "0.1.0"

from .analysis import (
    DistanceParams,
    FockParams,
    coord_energy,
    distance,
    distance_p,
    dual_distance_bounds,
    energy,
    incomplete_gamma,
    kernel_abs_integral,
    norm_inf,
    norm_p,
    project,
    second_moment_direct,
    second_moment_identity,
)
from .calculus import (
    deflate,
    gradient,
    gradient_norm_at,
    partial,
    partial_multi,
    radial,
    radial_power,
    taylor_coefficients,
)
from .core import EntireFn, LogComplex, eval_fn, eval_weighted
from .dsl import format_dsl, parse_dsl
from .integrate import (
    Estimate,
    GaussianMeasure,
    MCConfig,
    MCIntegrator,
    QuadIntegrator,
    gauss_hermite_rule,
    importance_center,
    mc_integrate,
    polar_rule,
    quad_integrate,
)
from .verify import SUITES, build_family, divergence_probe, run_suite

__all__ = [
    "__version__",
    "EntireFn",
    "LogComplex",
    "eval_fn",
    "eval_weighted",
    "parse_dsl",
    "format_dsl",
    "partial",
    "gradient",
    "gradient_norm_at",
    "radial",
    "radial_power",
    "partial_multi",
    "taylor_coefficients",
    "deflate",
    "GaussianMeasure",
    "Estimate",
    "MCConfig",
    "QuadIntegrator",
    "MCIntegrator",
    "gauss_hermite_rule",
    "polar_rule",
    "quad_integrate",
    "mc_integrate",
    "importance_center",
    "FockParams",
    "DistanceParams",
    "norm_p",
    "norm_inf",
    "distance",
    "distance_p",
    "energy",
    "coord_energy",
    "second_moment_identity",
    "second_moment_direct",
    "project",
    "incomplete_gamma",
    "kernel_abs_integral",
    "dual_distance_bounds",
    "SUITES",
    "run_suite",
    "build_family",
    "divergence_probe",
]
