"""Complex-plane plumbing: cut-plane domain checks, principal branches,
and compensated summation.

Everything here treats the plane as cut along the negative real half-line
(-inf, 0]; principal values are used throughout, with arguments confined
to the open interval (-pi, pi).
"""

from __future__ import annotations

import cmath
import math
from typing import Iterable

__all__ = [
    "CutPlaneError",
    "require_cut_plane",
    "require_finite",
    "principal_log",
    "principal_pow",
    "compensated_sum",
]


class CutPlaneError(ValueError):
    """Argument lies on the cut (-inf, 0] or is not finite."""


def require_finite(w, name: str = "value") -> complex:
    """Coerce to complex and reject NaN/Inf components."""
    w = complex(w)
    if not (math.isfinite(w.real) and math.isfinite(w.imag)):
        raise CutPlaneError(f"{name} must have finite real and imaginary parts, got {w!r}")
    return w


def require_cut_plane(z, name: str = "z") -> complex:
    """Coerce to complex and reject points on the cut (-inf, 0]."""
    z = require_finite(z, name)
    if z.imag == 0.0 and z.real <= 0.0:
        raise CutPlaneError(f"{name} = {z!r} lies on the cut (-inf, 0]")
    return z


def principal_log(z) -> complex:
    """Principal logarithm, imaginary part in (-pi, pi); z must be off the cut."""
    z = require_cut_plane(z)
    return cmath.log(z)


def principal_pow(z, w) -> complex:
    """z**w with the principal branch, exp(w * principal_log(z)).

    w == 0 and w == 1 are exact by convention.
    """
    z = require_cut_plane(z)
    w = require_finite(w, "exponent")
    if w == 0:
        return complex(1.0)
    if w == 1:
        return z
    return cmath.exp(w * cmath.log(z))


def _neumaier(values: list[float]) -> float:
    total = 0.0
    comp = 0.0
    for x in values:
        t = total + x
        if abs(total) >= abs(x):
            comp += (total - t) + x
        else:
            comp += (x - t) + total
        total = t
    return total + comp


def compensated_sum(terms: Iterable[complex]) -> complex:
    """Sum complex values with Neumaier compensation on each component.

    The result differs from the exact sum by O(eps) * sum(|terms|) with a
    small constant, independent of the number of terms.
    """
    re = []
    im = []
    for w in terms:
        w = require_finite(w, "term")
        re.append(w.real)
        im.append(w.imag)
    return complex(_neumaier(re), _neumaier(im))
