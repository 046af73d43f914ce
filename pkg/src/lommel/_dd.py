"""Double-double arithmetic (pairs of binary64) for cancellation-heavy sums.

Error-free transformations after Dekker and Shewchuk; the mul/div/add
algorithms follow the usual double-double recipes.  A complex double-double
is a flat tuple (re_hi, re_lo, im_hi, im_lo).
"""

from __future__ import annotations

_SPLITTER = 134217729.0  # 2**27 + 1


def two_sum(a: float, b: float) -> tuple[float, float]:
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def quick_two_sum(a: float, b: float) -> tuple[float, float]:
    # requires |a| >= |b| or a == 0
    s = a + b
    return s, b - (s - a)


def two_prod(a: float, b: float) -> tuple[float, float]:
    p = a * b
    t = _SPLITTER * a
    ah = t - (t - a)
    al = a - ah
    t = _SPLITTER * b
    bh = t - (t - b)
    bl = b - bh
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def dd_add(ah: float, al: float, bh: float, bl: float) -> tuple[float, float]:
    s, e = two_sum(ah, bh)
    e += al + bl
    return quick_two_sum(s, e)


def dd_mul(ah: float, al: float, bh: float, bl: float) -> tuple[float, float]:
    p, e = two_prod(ah, bh)
    e += ah * bl + al * bh
    return quick_two_sum(p, e)


def dd_div(ah: float, al: float, bh: float, bl: float) -> tuple[float, float]:
    q1 = ah / bh
    rh, rl = dd_mul(q1, 0.0, bh, bl)
    s, e = two_sum(ah, -rh)
    e += al - rl
    q2 = (s + e) / bh
    return quick_two_sum(q1, q2)


def cdd(z: complex) -> tuple[float, float, float, float]:
    return (z.real, 0.0, z.imag, 0.0)


def cdd_to_complex(a) -> complex:
    return complex(a[0] + a[1], a[2] + a[3])


def cdd_hi(a) -> complex:
    return complex(a[0], a[2])


def cdd_neg(a):
    return (-a[0], -a[1], -a[2], -a[3])


def cdd_add(a, b):
    return (*dd_add(a[0], a[1], b[0], b[1]), *dd_add(a[2], a[3], b[2], b[3]))


def cdd_mul(a, b):
    rr = dd_mul(a[0], a[1], b[0], b[1])
    ii = dd_mul(a[2], a[3], b[2], b[3])
    ri = dd_mul(a[0], a[1], b[2], b[3])
    ir = dd_mul(a[2], a[3], b[0], b[1])
    return (*dd_add(rr[0], rr[1], -ii[0], -ii[1]), *dd_add(*ri, *ir))


def cdd_div(a, b):
    # a / b = a * conj(b) / |b|^2
    den = dd_add(*dd_mul(b[0], b[1], b[0], b[1]), *dd_mul(b[2], b[3], b[2], b[3]))
    num = cdd_mul(a, (b[0], b[1], -b[2], -b[3]))
    return (*dd_div(num[0], num[1], *den), *dd_div(num[2], num[3], *den))
