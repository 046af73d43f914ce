"""Large-argument asymptotics of J_nu: Hankel symbols, the divergent
cosine/sine sums C(z) and S(z), optimal (least-term) truncation, and the
order-shifted bundle behind the square-and-add decomposition

    (pi z / 2) [J_nu^2 + J_{nu+1}^2] - 1 = A c^2 + 2 H c s + B s^2.

C and S are asymptotic power series in 1/(2z) whose terms eventually grow
factorially; truncating at the least term leaves an error on the order of
that term, which is what the error estimates here report.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

from .numerics import compensated_sum, require_cut_plane, require_finite

__all__ = [
    "hankel_symbols",
    "phase_factors",
    "cs_sums",
    "cs_remainder",
    "optimal_truncation",
    "bessel_j_asymptotic",
    "AsymptoticParts",
    "asymptotic_parts",
    "TRUNCATION_CAP",
]

_EPS = 2.220446049250313e-16
_PHASE_IMAG_LIMIT = 700.0

#: Largest symbol index considered by the least-term scan.
TRUNCATION_CAP = 200


@lru_cache(maxsize=256)
def _symbol_table(nu: complex, m_max: int) -> tuple[complex, ...]:
    values = [complex(1.0)]
    for m in range(1, m_max + 1):
        values.append(values[-1] * (4.0 * nu * nu - (2 * m - 1) ** 2) / (4.0 * m))
    return tuple(values)


def hankel_symbols(nu, m_max: int) -> tuple[complex, ...]:
    """Hankel symbols (nu, 0) .. (nu, m_max).

    (nu, m) = (4 nu^2 - 1^2)(4 nu^2 - 3^2) ... (4 nu^2 - (2m-1)^2) / (2^{2m} m!),
    built by the ratio recurrence (nu, m) = (nu, m-1) (4 nu^2 - (2m-1)^2) / (4m).
    """
    nu = require_finite(nu, "nu")
    if m_max < 0:
        raise ValueError("m_max must be >= 0")
    table = _symbol_table(nu, m_max)
    last = table[-1]
    if not (math.isfinite(last.real) and math.isfinite(last.imag)):
        raise OverflowError(f"Hankel symbols for nu={nu!r} overflow before m={m_max}")
    return table


def phase_factors(nu, z) -> tuple[complex, complex]:
    """cos and sin of z - nu*pi/2 - pi/4.

    Raises OverflowError once the imaginary part of the argument exceeds
    700 in magnitude (exp would overflow binary64); extreme imaginary
    arguments belong to the analytically reduced paths in lommel.deviation.
    """
    nu = require_finite(nu, "nu")
    z = require_cut_plane(z)
    w = z - nu * (math.pi / 2.0) - math.pi / 4.0
    if abs(w.imag) > _PHASE_IMAG_LIMIT:
        raise OverflowError(
            f"phase argument has |imag| = {abs(w.imag):.3g} > {_PHASE_IMAG_LIMIT:g}"
        )
    return cmath.cos(w), cmath.sin(w)


def _scaled_terms(nu: complex, z: complex, k_max: int) -> list[complex]:
    # u_k = (nu, k) / (2z)^k by a joint recurrence; avoids overflowing
    # the raw symbols at large k.
    inv2z = 1.0 / (2.0 * z)
    u = [complex(1.0)]
    for k in range(1, k_max + 1):
        u.append(u[-1] * (4.0 * nu * nu - (2 * k - 1) ** 2) / (4.0 * k) * inv2z)
    return u


def cs_sums(nu, z, p: int) -> tuple[complex, complex, float]:
    """Partial sums of C(z) and S(z) with exactly p terms each.

    C ~ sum (-1)^m (nu,2m)/(2z)^{2m}, S ~ sum (-1)^m (nu,2m+1)/(2z)^{2m+1}.
    Also returns the magnitude of the first omitted C-term for error
    accounting.
    """
    nu = require_finite(nu, "nu")
    z = require_cut_plane(z)
    if p < 1:
        raise ValueError("p must be >= 1")
    u = _scaled_terms(nu, z, 2 * p)
    c_terms = [u[2 * m] * (1 if m % 2 == 0 else -1) for m in range(p)]
    s_terms = [u[2 * m + 1] * (1 if m % 2 == 0 else -1) for m in range(p)]
    c_sum = compensated_sum(c_terms)
    s_sum = compensated_sum(s_terms)
    return c_sum, s_sum, abs(u[2 * p])


def cs_remainder(nu, z, p: int) -> complex:
    """C(z) at its least-term truncation minus the p-term partial sum.

    The two partial sums share every term below index p, so the difference
    is exactly the tail sum_{m=p}^{P-1} (-1)^m (nu,2m)/(2z)^{2m}; summing
    the tail directly resolves remainders far below 1 ulp of C itself.
    """
    nu = require_finite(nu, "nu")
    z = require_cut_plane(z)
    if p < 1:
        raise ValueError("p must be >= 1")
    p_best = max(1, (optimal_truncation(nu, z) + 1) // 2)
    p_ref = max(p_best, p + 1)
    u = _scaled_terms(nu, z, 2 * p_ref - 2)
    tail = [u[2 * m] * (1 if m % 2 == 0 else -1) for m in range(p, p_ref)]
    return compensated_sum(tail)


def optimal_truncation(nu, z) -> int:
    """Number of leading terms of the combined symbol sequence to keep.

    Scans |(nu, m) / (2z)^m| for m up to TRUNCATION_CAP in log space and
    returns the index of the least term; when the symbols terminate
    (half-odd integer orders) returns one past the last nonzero term.
    """
    nu = require_finite(nu, "nu")
    z = require_cut_plane(z)
    if abs(z) < 1.0:
        raise ValueError(f"optimal truncation needs |z| >= 1, got |z| = {abs(z):.3g}")
    log_2z = math.log(2.0 * abs(z))
    log_mag = 0.0
    best = math.inf
    best_m = 1
    last_nonzero = 0
    for m in range(1, TRUNCATION_CAP + 1):
        factor = 4.0 * nu * nu - (2 * m - 1) ** 2
        if factor == 0:
            return last_nonzero + 1
        log_mag += math.log(abs(factor)) - math.log(4.0 * m) - log_2z
        last_nonzero = m
        if log_mag < best:
            best = log_mag
            best_m = m
    return best_m


def bessel_j_asymptotic(nu, z):
    """J_nu(z) from the Hankel expansion at its least-term truncation.

    (pi z / 2)^(1/2) J_nu(z) = c(z) C(z) - s(z) S(z) with the principal
    square root; the error estimate is (2/(pi z))^(1/2) (|c|+|s|) times the
    first omitted term.  Exact (finite sum) for half-odd integer orders.
    """
    from .series import EvalResult, Method

    nu = require_finite(nu, "nu")
    z = require_cut_plane(z)
    n = optimal_truncation(nu, z)
    p = max(1, (n + 1) // 2)
    c_sum, s_sum, first_omitted = cs_sums(nu, z, p)
    c, s = phase_factors(nu, z)
    root = cmath.sqrt(2.0 / (math.pi * z))
    value = root * (c * c_sum - s * s_sum)
    estimate = abs(root) * (abs(c) + abs(s)) * first_omitted
    return EvalResult(value=value, method=Method.ASYMPTOTIC, terms_used=p,
                      error_estimate=estimate)


@dataclass(frozen=True)
class AsymptoticParts:
    """Phase factors and truncated-series parts at one point.

    c0 = C(z; nu) - 1, s0 = S(z; nu), c1 = C(z; nu+1) - 1, s1 = S(z; nu+1),
    and the quadratic-form coefficients

        a = c0^2 + 2 c0 + s1^2
        h = c1 s1 - c0 s0 + s1 - s0
        b = c1^2 + 2 c1 + s0^2

    so that (pi z / 2)(J_nu^2 + J_{nu+1}^2) - 1 = a c^2 + 2 h c s + b s^2.
    """

    c: complex
    s: complex
    c0: complex
    s0: complex
    c1: complex
    s1: complex
    a: complex
    h: complex
    b: complex
    truncation_order: int
    trunc_error_estimate: float

    def deviation_value(self) -> complex:
        """The quadratic form a c^2 + 2 h c s + b s^2."""
        return self.a * self.c ** 2 + 2.0 * self.h * self.c * self.s + self.b * self.s ** 2


def asymptotic_parts(nu, z) -> AsymptoticParts:
    """Assemble the order-nu and order-(nu+1) truncated sums and the
    square-and-add coefficients at z."""
    nu = require_finite(nu, "nu")
    z = require_cut_plane(z)
    p_lo = max(1, (optimal_truncation(nu, z) + 1) // 2)
    p_hi = max(1, (optimal_truncation(nu + 1.0, z) + 1) // 2)
    c_lo, s_lo, fo_lo = cs_sums(nu, z, p_lo)
    c_hi, s_hi, fo_hi = cs_sums(nu + 1.0, z, p_hi)
    c0 = c_lo - 1.0
    s0 = s_lo
    c1 = c_hi - 1.0
    s1 = s_hi
    a = c0 * c0 + 2.0 * c0 + s1 * s1
    h = c1 * s1 - c0 * s0 + s1 - s0
    b = c1 * c1 + 2.0 * c1 + s0 * s0
    c, s = phase_factors(nu, z)
    return AsymptoticParts(c=c, s=s, c0=c0, s0=s0, c1=c1, s1=s1, a=a, h=h, b=b,
                           truncation_order=max(p_lo, p_hi),
                           trunc_error_estimate=fo_lo + fo_hi)
