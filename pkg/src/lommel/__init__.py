"""Bessel functions of the first kind for complex order on the cut plane,
by two independent routes, with numerical verification of the asymptotic
relation J_nu^2(z) + J_{nu+1}^2(z) ~ 2/(pi z) on the real axis and of its
failure along non-real rays."""

from .asymptotic import (
    AsymptoticParts,
    asymptotic_parts,
    bessel_j_asymptotic,
    cs_remainder,
    cs_sums,
    hankel_symbols,
    optimal_truncation,
    phase_factors,
)
from .deviation import (
    DegenerateDataError,
    DeviationMethod,
    DeviationSample,
    FitResult,
    RaySweep,
    deviation,
    fit_power_law,
    imag_axis_normalized,
    imag_axis_normalized_direct,
    leading_term_identity,
    linear_spaced,
    log_abs_deviation_ray,
    log_spaced,
    lommel_ratio,
    ray_factor,
    ray_factor_lower,
    ray_sweep,
    real_axis_decay_check,
)
from .gamma import GammaConfig, LANCZOS_607_128, PoleError, gamma, reciprocal_gamma
from .numerics import (
    CutPlaneError,
    compensated_sum,
    principal_log,
    principal_pow,
    require_cut_plane,
    require_finite,
)
from .series import (
    EvalResult,
    Method,
    NonConvergenceError,
    SERIES_SWITCH_RADIUS,
    UnsupportedOrderError,
    bessel_j,
    bessel_j_closed_half_odd,
    bessel_j_series,
)

__version__ = "0.1.0"

__all__ = [
    "AsymptoticParts",
    "CutPlaneError",
    "DegenerateDataError",
    "DeviationMethod",
    "DeviationSample",
    "EvalResult",
    "FitResult",
    "GammaConfig",
    "LANCZOS_607_128",
    "Method",
    "NonConvergenceError",
    "PoleError",
    "RaySweep",
    "SERIES_SWITCH_RADIUS",
    "UnsupportedOrderError",
    "asymptotic_parts",
    "bessel_j",
    "bessel_j_asymptotic",
    "bessel_j_closed_half_odd",
    "bessel_j_series",
    "compensated_sum",
    "cs_remainder",
    "cs_sums",
    "deviation",
    "fit_power_law",
    "gamma",
    "hankel_symbols",
    "imag_axis_normalized",
    "imag_axis_normalized_direct",
    "leading_term_identity",
    "linear_spaced",
    "log_abs_deviation_ray",
    "log_spaced",
    "lommel_ratio",
    "optimal_truncation",
    "phase_factors",
    "principal_log",
    "principal_pow",
    "ray_factor",
    "ray_factor_lower",
    "ray_sweep",
    "real_axis_decay_check",
    "reciprocal_gamma",
    "require_cut_plane",
    "require_finite",
]
