"""The Lommel deviation D(z) = (pi z / 2)[J_nu^2(z) + J_{nu+1}^2(z)] - 1
and the numerical checks built on it.

The relation J_nu^2 + J_{nu+1}^2 ~ 2/(pi z) holds with D = O(1/t) as z = t
runs to infinity along the positive real axis, holds with true equality
for nu = -1/2, and fails exponentially along every non-real ray: for
nu = 1/2 and z = t e^{i theta} with 0 < theta < pi,

    D(z) = e^{-2iz} / (2z) * F(t, theta),    F -> -i,

so |D| grows like e^{2 t sin(theta)} / (2t).  Evaluation paths here factor
the dominant exponential analytically, so rays can be followed to large t
without intermediate overflow.
"""

from __future__ import annotations

import cmath
import enum
import math
import statistics
from dataclasses import dataclass, replace
from typing import Sequence

from .asymptotic import phase_factors
from .numerics import require_cut_plane, require_finite
from .series import UnsupportedOrderError, bessel_j, bessel_j_closed_half_odd

__all__ = [
    "DeviationMethod",
    "DeviationSample",
    "RaySweep",
    "FitResult",
    "DegenerateDataError",
    "deviation",
    "lommel_ratio",
    "leading_term_identity",
    "imag_axis_normalized",
    "imag_axis_normalized_direct",
    "ray_factor",
    "ray_factor_lower",
    "log_abs_deviation_ray",
    "fit_power_law",
    "real_axis_decay_check",
    "ray_sweep",
    "log_spaced",
    "linear_spaced",
]

_CLOSED_DIRECT_IMAG_LIMIT = 300.0


class DeviationMethod(str, enum.Enum):
    DIRECT = "direct"
    CLOSED_FORM = "closed"
    LOG_SCALED = "log-scaled"


class DegenerateDataError(ValueError):
    """Not enough usable data to fit a power law."""


@dataclass(frozen=True)
class DeviationSample:
    """D at one point, with a normalization slot for sweep output."""

    t: float
    z: complex
    deviation: complex
    normalized: complex
    method: DeviationMethod
    log_abs_deviation: float


@dataclass(frozen=True)
class RaySweep:
    """Deviation samples along the ray arg z = theta."""

    nu: complex
    theta: float
    t_values: tuple[float, ...]
    samples: tuple[DeviationSample, ...]


@dataclass(frozen=True)
class FitResult:
    """Envelope power-law fit; see fit_power_law and real_axis_decay_check."""

    exponent: float
    amplitude: float
    residual_rms: float
    window_count: int
    excluded_zeros: int = 0
    exact_zero: bool = False


def _closed_form_encoding(nu: complex) -> int | None:
    if nu.imag == 0.0 and 2.0 * nu.real in (-1.0, 1.0):
        return int(2.0 * nu.real)
    return None


def _deviation_closed(nu_code: int, z: complex) -> tuple[complex, DeviationMethod, float]:
    if nu_code == -1:
        # cos^2 z + sin^2 z - 1 through the exponential product
        # e^{iz} e^{-iz}; splitting the exponents halves their magnitude.
        p = cmath.exp(0.5j * z) * cmath.exp(-0.5j * z)
        d = p * p - 1.0
        log_abs = math.log(abs(d)) if d != 0 else -math.inf
        return d, DeviationMethod.CLOSED_FORM, log_abs
    # nu = 1/2: D = sin^2(z)/z^2 - sin(2z)/z
    y = z.imag
    if abs(y) <= _CLOSED_DIRECT_IMAG_LIMIT:
        d = cmath.sin(z) ** 2 / (z * z) - cmath.sin(2.0 * z) / z
        log_abs = math.log(abs(d)) if d != 0 else -math.inf
        return d, DeviationMethod.CLOSED_FORM, log_abs
    # dominant exponential factored out: D = e^{-2iz} F / (2z) above the
    # real axis, D = e^{2iz} F' / (2z) below
    if y > 0:
        w = cmath.exp(2.0j * z)
        f = -((w - 1.0) ** 2) / (2.0 * z) + 1.0j * (w * w - 1.0)
    else:
        w = cmath.exp(-2.0j * z)
        f = -((w - 1.0) ** 2) / (2.0 * z) + 1.0j * (1.0 - w * w)
    log_abs = 2.0 * abs(y) - math.log(2.0 * abs(z)) + math.log(abs(f))
    if log_abs > 700.0:
        raise OverflowError(
            f"|D| ~ exp({log_abs:.1f}) is not representable; use ray_factor or "
            "log_abs_deviation_ray for this regime"
        )
    d = f / (2.0 * z) / w
    return d, DeviationMethod.LOG_SCALED, log_abs


def deviation(nu, z, method: str = "auto") -> DeviationSample:
    """D(z) = (pi z / 2)[J_nu^2(z) + J_{nu+1}^2(z)] - 1.

    method is "auto", "direct" (J values via bessel_j dispatch), or
    "closed" (elementary forms; nu must be -1/2 or 1/2).  "auto" prefers
    the closed forms when they exist.  The closed nu = 1/2 path switches
    to the exponential-factored (log-scaled) evaluation high above the
    real axis and raises OverflowError once |D| itself exceeds binary64
    range.
    """
    nu = require_finite(nu, "nu")
    z = require_cut_plane(z)
    code = _closed_form_encoding(nu)
    if method == "auto":
        method = "closed" if code is not None else "direct"
    if method == "closed":
        if code is None:
            raise UnsupportedOrderError(f"no closed deviation form for nu = {nu!r}")
        d, tag, log_abs = _deviation_closed(code, z)
    elif method == "direct":
        j_lo = bessel_j(nu, z)
        j_hi = bessel_j(nu + 1.0, z)
        d = (math.pi * z / 2.0) * (j_lo.value ** 2 + j_hi.value ** 2) - 1.0
        tag = DeviationMethod.DIRECT
        log_abs = math.log(abs(d)) if d != 0 else -math.inf
    else:
        raise ValueError(f"unknown method {method!r}")
    return DeviationSample(t=abs(z), z=z, deviation=d, normalized=d, method=tag,
                           log_abs_deviation=log_abs)


def lommel_ratio(nu, z) -> complex:
    """[J_nu^2 + J_{nu+1}^2] / (2/(pi z)), i.e. 1 + D(z)."""
    return 1.0 + deviation(nu, z).deviation


def leading_term_identity(nu, z) -> complex:
    """Residual of the leading-term form of the relation.

    The leading asymptotic terms of J_nu and J_{nu+1} are
    (2/(pi z))^(1/2) c(z) and (2/(pi z))^(1/2) s(z); their squares add to
    2/(pi z) exactly, so this returns c^2 + s^2 - 1, which vanishes
    identically for every nu and every z off the cut.
    """
    c, s = phase_factors(nu, z)
    return c * c + s * s - 1.0


def imag_axis_normalized_direct(t: float) -> float:
    """2t e^{-2t} D(it) for nu = 1/2 from closed-form J values at face value.

    Intermediates reach e^{2t}, so this route is limited to t <= ~300.
    """
    if not t > 0:
        raise ValueError("t must be positive")
    z = complex(0.0, t)
    j_half = bessel_j_closed_half_odd(1, z)
    j_three = bessel_j_closed_half_odd(3, z)
    d = (math.pi * z / 2.0) * (j_half ** 2 + j_three ** 2) - 1.0
    scaled = 2.0 * t * math.exp(-2.0 * t) * d
    return scaled.real


def imag_axis_normalized(t: float) -> float:
    """2t e^{-2t} D(it) for nu = 1/2, stable for t up to 1e6 and beyond.

    The factor e^{2t} is cancelled analytically before exponentiation,
    leaving (1 - e^{-2t})^2 / (2t) - 1 + e^{-4t}; the limit as t grows is
    -1.  For t <= 300 the value is cross-checked against the face-value
    route to 1e-12 relative.
    """
    if not t > 0:
        raise ValueError("t must be positive")
    one_minus = -math.expm1(-2.0 * t)
    value = one_minus * one_minus / (2.0 * t) - 1.0 + math.exp(-4.0 * t)
    if t <= _CLOSED_DIRECT_IMAG_LIMIT:
        direct = imag_axis_normalized_direct(t)
        if abs(direct - value) > 1e-12 * abs(value):
            raise ArithmeticError(
                f"imaginary-axis routes disagree at t={t}: {direct!r} vs {value!r}"
            )
    return value


def ray_factor(theta: float, t: float) -> complex:
    """F(t, theta) = 2z e^{2iz} D(z) at z = t e^{i theta}, nu = 1/2.

    Valid for 0 < theta < pi; all intermediates are bounded (|e^{2iz}| < 1
    above the real axis), so t may be arbitrarily large.  F -> -i as t
    grows, at rate O(1/t).
    """
    if not 0.0 < theta < math.pi:
        raise ValueError("theta must lie in (0, pi)")
    if not t >= 1.0:
        raise ValueError("t must be >= 1")
    z = t * cmath.exp(1j * theta)
    w = cmath.exp(2.0j * z)
    return -((w - 1.0) ** 2) / (2.0 * z) + 1.0j * (w * w - 1.0)


def ray_factor_lower(theta: float, t: float) -> complex:
    """Mirror of ray_factor for rays below the real axis.

    For -pi < theta < 0 the bounded extraction is e^{2iz}/(2z), giving
    F'(t, theta) = 2z e^{-2iz} D(z); by conjugate symmetry F' -> +i.
    """
    if not -math.pi < theta < 0.0:
        raise ValueError("theta must lie in (-pi, 0)")
    if not t >= 1.0:
        raise ValueError("t must be >= 1")
    z = t * cmath.exp(1j * theta)
    w = cmath.exp(-2.0j * z)
    return -((w - 1.0) ** 2) / (2.0 * z) + 1.0j * (1.0 - w * w)


def log_abs_deviation_ray(theta: float, t: float) -> float:
    """log |D(t e^{i theta})| for nu = 1/2, stable at any t.

    log |D| = 2 t |sin theta| - log(2t) + log |F|, with F from the
    bounded-side extraction for the given half-plane.
    """
    if theta > 0:
        f = ray_factor(theta, t)
    else:
        f = ray_factor_lower(theta, t)
    return 2.0 * t * abs(math.sin(theta)) - math.log(2.0 * t) + math.log(abs(f))


def fit_power_law(samples: Sequence[tuple[float, float]], windows: int = 8) -> FitResult:
    """Fit the upper envelope of |samples| to amplitude * t^exponent.

    Samples are (t, magnitude) pairs with t strictly increasing; they are
    partitioned into log-uniform windows, the per-window maxima form the
    oscillation envelope, and the envelope is fit by least squares in
    log-log coordinates.  Zero magnitudes are excluded (count reported);
    fewer than two nonempty windows raises DegenerateDataError.
    """
    if windows < 8:
        raise ValueError("need at least 8 windows")
    if len(samples) < 20:
        raise ValueError(f"need at least 20 samples, got {len(samples)}")
    t_prev = 0.0
    kept: list[tuple[float, float]] = []
    excluded = 0
    for t, mag in samples:
        if not t > t_prev:
            raise ValueError("t values must be strictly increasing and positive")
        t_prev = t
        if mag < 0:
            raise ValueError("magnitudes must be non-negative")
        if mag == 0.0:
            excluded += 1
        else:
            kept.append((t, mag))
    if len(kept) < 2:
        raise DegenerateDataError("all magnitudes were zero")

    lo = math.log(samples[0][0])
    hi = math.log(samples[-1][0])
    span = hi - lo
    bins: list[tuple[float, float] | None] = [None] * windows
    for t, mag in kept:
        i = min(windows - 1, int(windows * (math.log(t) - lo) / span)) if span > 0 else 0
        if bins[i] is None or mag > bins[i][1]:
            bins[i] = (t, mag)
    env = [b for b in bins if b is not None]
    if len(env) < 2:
        raise DegenerateDataError(f"only {len(env)} nonempty windows")

    xs = [math.log(t) for t, _ in env]
    ys = [math.log(mag) for _, mag in env]
    fit = statistics.linear_regression(xs, ys)
    residuals = [y - (fit.intercept + fit.slope * x) for x, y in zip(xs, ys)]
    rms = math.sqrt(sum(r * r for r in residuals) / len(residuals))
    return FitResult(exponent=fit.slope, amplitude=math.exp(fit.intercept),
                     residual_rms=rms, window_count=len(env), excluded_zeros=excluded)


def real_axis_decay_check(nu, t_min: float = 10.0, t_max: float = 1000.0,
                          n: int = 400) -> FitResult:
    """Sample D along the positive real axis and measure its decay.

    Returns a FitResult whose amplitude field holds sup t * |D(t)| over
    the grid and whose exponent is the fitted envelope slope of |D(t)|
    (about -1 when the relation holds).  When D vanishes to roundoff
    everywhere (nu = -1/2), the result is flagged exact_zero and no fit is
    attempted.
    """
    nu = require_finite(nu, "nu")
    if not (10.0 <= t_min < t_max):
        raise ValueError("need 10 <= t_min < t_max")
    if n < 50:
        raise ValueError("need n >= 50")
    mags = []
    sup_t_abs_d = 0.0
    for t in log_spaced(t_min, t_max, n):
        d = abs(deviation(nu, complex(t)).deviation)
        mags.append((t, d))
        sup_t_abs_d = max(sup_t_abs_d, t * d)
    if max(d for _, d in mags) < 1e-12:
        return FitResult(exponent=0.0, amplitude=sup_t_abs_d, residual_rms=0.0,
                         window_count=0, exact_zero=True)
    fit = fit_power_law(mags)
    return replace(fit, amplitude=sup_t_abs_d)


def log_spaced(t_min: float, t_max: float, n: int) -> list[float]:
    """n log-uniform points from t_min to t_max inclusive."""
    if n < 2 or not 0 < t_min < t_max:
        raise ValueError("need n >= 2 and 0 < t_min < t_max")
    ratio = t_max / t_min
    return [t_min * ratio ** (k / (n - 1)) for k in range(n)]


def linear_spaced(t_min: float, t_max: float, n: int) -> list[float]:
    """n equally spaced points from t_min to t_max inclusive."""
    if n < 2 or not 0 < t_min < t_max:
        raise ValueError("need n >= 2 and 0 < t_min < t_max")
    step = (t_max - t_min) / (n - 1)
    return [t_min + k * step for k in range(n)]


def ray_sweep(nu, theta: float, t_values: Sequence[float],
              normalization: str = "none") -> RaySweep:
    """Evaluate D along z = t e^{i theta} and fill the normalized column.

    normalization: "none" (D itself), "td" (t * D), "imag"
    (2t e^{-2t} D(it); requires nu = 1/2 and theta = pi/2), or "rayf"
    (F(t, theta); requires nu = 1/2 and 0 < theta < pi).
    """
    nu = require_finite(nu, "nu")
    if not -math.pi < theta < math.pi:
        raise ValueError("theta must lie in (-pi, pi)")
    t_values = tuple(float(t) for t in t_values)
    if len(t_values) < 1 or any(b <= a for a, b in zip(t_values, t_values[1:])):
        raise ValueError("t_values must be non-empty and strictly increasing")
    if t_values[0] <= 0:
        raise ValueError("t_values must be positive")
    if normalization not in ("none", "td", "imag", "rayf"):
        raise ValueError(f"unknown normalization {normalization!r}")
    if normalization in ("imag", "rayf") and not (nu.imag == 0 and nu.real == 0.5):
        raise ValueError(f"normalization {normalization!r} requires nu = 1/2")
    if normalization == "imag" and abs(theta - math.pi / 2) > 1e-12:
        raise ValueError('normalization "imag" requires theta = pi/2')
    if normalization == "rayf" and not 0 < theta < math.pi:
        raise ValueError('normalization "rayf" requires 0 < theta < pi')

    direction = cmath.exp(1j * theta)
    out = []
    for t in t_values:
        sample = deviation(nu, t * direction)
        if normalization == "td":
            norm = t * sample.deviation
        elif normalization == "imag":
            norm = complex(imag_axis_normalized(t))
        elif normalization == "rayf":
            norm = ray_factor(theta, t)
        else:
            norm = sample.deviation
        out.append(replace(sample, t=t, normalized=norm))
    return RaySweep(nu=nu, theta=theta, t_values=t_values, samples=tuple(out))
