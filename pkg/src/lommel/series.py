"""Bessel functions of the first kind from the defining power series.

J_nu(z) = (z/2)^nu * sum_{m>=0} (-1)^m (z/2)^{2m} / (Gamma(nu+m+1) m!)

with the principal value of (z/2)^nu, for any complex order nu and any z
off the cut (-inf, 0].  For moderate real z the series loses roughly
|z| * log10(e) decimal digits to cancellation, so the term recurrence and
the accumulation run in double-double arithmetic; results are returned as
ordinary binary64 complex numbers.

Elementary closed forms for nu in {-1/2, 1/2, 3/2} are provided as
independent oracles, and bessel_j() dispatches between the series and the
large-|z| asymptotic evaluator.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

from . import _dd
from .numerics import principal_pow, require_cut_plane, require_finite

__all__ = [
    "Method",
    "EvalResult",
    "NonConvergenceError",
    "UnsupportedOrderError",
    "bessel_j_series",
    "bessel_j_closed_half_odd",
    "bessel_j",
    "SERIES_SWITCH_RADIUS",
]

_EPS = 2.220446049250313e-16
_MAX_TERMS = 1000

#: |z| at or below which bessel_j() uses the power series.
SERIES_SWITCH_RADIUS = 30.0


class Method(str, enum.Enum):
    SERIES = "series"
    ASYMPTOTIC = "asymptotic"
    CLOSED_FORM = "closed"


class NonConvergenceError(ArithmeticError):
    """Power series failed to meet its stopping rule within the term cap."""


class UnsupportedOrderError(ValueError):
    """No elementary closed form is available for the requested order."""


@dataclass(frozen=True)
class EvalResult:
    """A function value with its evaluation method and error accounting."""

    value: complex
    method: Method
    terms_used: int
    error_estimate: float

    def __post_init__(self):
        if self.terms_used < 1:
            raise ValueError("terms_used must be >= 1")
        if not self.error_estimate >= 0.0:
            raise ValueError("error_estimate must be non-negative")


def _is_nonpositive_int(nu: complex) -> bool:
    return nu.imag == 0.0 and nu.real == int(nu.real) and nu.real <= -1.0


def bessel_j_series(nu, z, tol: float = 1e-15) -> EvalResult:
    """Evaluate J_nu(z) by summing the defining power series.

    Terms follow the ratio recurrence
    term_{m+1} = term_m * (-(z/2)^2) / ((nu+m+1)(m+1)), seeded with
    1/Gamma(nu+1); accumulation is compensated (double-double), and the
    sum stops after two consecutive terms fall below tol relative to the
    running sum.  Practical for |z| up to about 40.
    """
    from .gamma import reciprocal_gamma

    nu = require_finite(nu, "nu")
    z = require_cut_plane(z)
    if not (1e-16 <= tol < 0.1):
        raise ValueError(f"tol must lie in [1e-16, 0.1), got {tol}")

    half = z / 2.0
    w2 = _dd.cdd_neg(_dd.cdd_mul(_dd.cdd(half), _dd.cdd(half)))  # -(z/2)^2

    if _is_nonpositive_int(nu):
        # 1/Gamma(nu+m+1) kills every term before m = -nu; start there.
        m = int(-nu.real)
        term = _dd.cdd(complex(1.0 / math.factorial(m)))
        for _ in range(m):
            term = _dd.cdd_mul(term, w2)
    else:
        m = 0
        term = _dd.cdd(reciprocal_gamma(nu + 1.0))

    acc = (0.0, 0.0, 0.0, 0.0)
    max_term = 0.0
    terms_used = 0
    consecutive_small = 0
    while terms_used < _MAX_TERMS:
        acc = _dd.cdd_add(acc, term)
        terms_used += 1
        t_mag = abs(_dd.cdd_hi(term))
        if t_mag > max_term:
            max_term = t_mag
        divisor = (nu + (m + 1)) * (m + 1)
        term = _dd.cdd_div(_dd.cdd_mul(term, w2), _dd.cdd(divisor))
        m += 1
        threshold = tol * max(abs(_dd.cdd_hi(acc)), max_term * 1e-30)
        if abs(_dd.cdd_hi(term)) < threshold:
            consecutive_small += 1
            if consecutive_small >= 2:
                break
        else:
            consecutive_small = 0
    else:
        raise NonConvergenceError(
            f"series for nu={nu!r}, z={z!r} did not converge in {_MAX_TERMS} terms"
        )

    first_omitted = abs(_dd.cdd_hi(term))
    prefactor = principal_pow(half, nu)
    value = prefactor * _dd.cdd_to_complex(acc)
    estimate = abs(prefactor) * (max_term * terms_used * _EPS + first_omitted)
    return EvalResult(value=value, method=Method.SERIES, terms_used=terms_used,
                      error_estimate=estimate)


def bessel_j_closed_half_odd(two_nu_odd: int, z) -> complex:
    """Elementary J_nu for nu in {-1/2, 1/2, 3/2}, encoded as 2*nu.

    (pi z / 2)^(1/2) J_nu(z) equals cos z, sin z, and sin(z)/z - cos z
    respectively; the square root carries its principal value.
    """
    z = require_cut_plane(z)
    root = cmath.sqrt(2.0 / (math.pi * z))
    if two_nu_odd == -1:
        return root * cmath.cos(z)
    if two_nu_odd == 1:
        return root * cmath.sin(z)
    if two_nu_odd == 3:
        return root * (cmath.sin(z) / z - cmath.cos(z))
    raise UnsupportedOrderError(
        f"closed form requires 2*nu in {{-1, 1, 3}}, got {two_nu_odd}"
    )


def _closed_encoding(nu: complex) -> int:
    two_nu = 2.0 * nu.real
    if nu.imag == 0.0 and two_nu in (-1.0, 1.0, 3.0):
        return int(two_nu)
    raise UnsupportedOrderError(f"no closed form for nu = {nu!r}")


def bessel_j(nu, z, tol: float = 1e-15, method: str = "auto",
             switch_radius: float = SERIES_SWITCH_RADIUS) -> EvalResult:
    """J_nu(z) by the best route: series for |z| <= switch_radius, the
    Hankel asymptotic expansion beyond, or a closed form on request.

    method is one of "auto", "series", "asym", "closed".
    """
    from .asymptotic import bessel_j_asymptotic

    nu = require_finite(nu, "nu")
    z = require_cut_plane(z)
    if method == "auto":
        method = "series" if abs(z) <= switch_radius else "asym"
    if method == "series":
        return bessel_j_series(nu, z, tol)
    if method == "asym":
        return bessel_j_asymptotic(nu, z)
    if method == "closed":
        value = bessel_j_closed_half_odd(_closed_encoding(nu), z)
        return EvalResult(value=value, method=Method.CLOSED_FORM, terms_used=1,
                          error_estimate=8.0 * _EPS * abs(value))
    raise ValueError(f"unknown method {method!r}")
