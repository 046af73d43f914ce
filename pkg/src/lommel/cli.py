"""Command-line front end: single-point evaluation, ray sweeps with CSV
output, and the packaged verification suite.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
3 output I/O failure.  Numbers are serialized with 17 significant digits,
which round-trips binary64 exactly.
"""

from __future__ import annotations

import argparse
import cmath
import csv
import math
import random
import re
import sys
from dataclasses import dataclass

from .asymptotic import cs_remainder
from .deviation import (
    deviation,
    imag_axis_normalized,
    imag_axis_normalized_direct,
    linear_spaced,
    log_spaced,
    ray_factor,
    ray_sweep,
    real_axis_decay_check,
)
from .gamma import gamma
from .numerics import CutPlaneError
from .series import UnsupportedOrderError, bessel_j, bessel_j_closed_half_odd

__all__ = ["main", "SweepConfig"]

# Gamma(1+i), frozen from the limit-product / shifted-Stirling oracle.
_GAMMA_ONE_PLUS_I = complex(0.49801566811835607, -0.15494982830181067)

_CSV_HEADER = ["t", "z_re", "z_im", "D_re", "D_im", "abs_D",
               "normalized_re", "normalized_im", "method"]


@dataclass(frozen=True)
class SweepConfig:
    """Validated parameters of one ray sweep."""

    nu: complex
    theta: float
    t_min: float
    t_max: float
    n_points: int
    spacing: str
    normalization: str
    output_path: str | None

    def __post_init__(self):
        if not self.t_min < self.t_max:
            raise ValueError("need t_min < t_max")
        if self.n_points < 2:
            raise ValueError("need n_points >= 2")
        if self.spacing not in ("log", "linear"):
            raise ValueError(f"unknown spacing {self.spacing!r}")


def _fmt(x: float) -> str:
    return format(x, ".17g")


def _parse_angle(text: str) -> float:
    """Angles as plain floats or simple multiples of pi: 'pi/2', '-3pi/4'."""
    try:
        return float(text)
    except ValueError:
        pass
    m = re.fullmatch(r"([+-]?\d*\.?\d*)\s*pi\s*(?:/\s*(\d+\.?\d*))?", text.strip())
    if not m:
        raise argparse.ArgumentTypeError(f"cannot parse angle {text!r}")
    num = m.group(1)
    coef = float(num) if num not in ("", "+", "-") else (-1.0 if num == "-" else 1.0)
    div = float(m.group(2)) if m.group(2) else 1.0
    return coef * math.pi / div


def _parse_order(text: str) -> complex:
    try:
        return complex(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"cannot parse order {text!r}") from exc


def cmd_eval(args) -> int:
    nu = complex(args.nu_re, args.nu_im)
    z = complex(args.z_re, args.z_im)
    try:
        result = bessel_j(nu, z, tol=args.tol, method=args.method)
    except (CutPlaneError, UnsupportedOrderError, ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(",".join([
        _fmt(result.value.real),
        _fmt(result.value.imag),
        result.method.value,
        str(result.terms_used),
        _fmt(result.error_estimate),
    ]))
    return 0


def _sweep_rows(config: SweepConfig):
    spacer = log_spaced if config.spacing == "log" else linear_spaced
    grid = spacer(config.t_min, config.t_max, config.n_points)
    sweep = ray_sweep(config.nu, config.theta, grid, config.normalization)
    for sample in sweep.samples:
        yield [
            _fmt(sample.t),
            _fmt(sample.z.real), _fmt(sample.z.imag),
            _fmt(sample.deviation.real), _fmt(sample.deviation.imag),
            _fmt(abs(sample.deviation)),
            _fmt(sample.normalized.real), _fmt(sample.normalized.imag),
            sample.method.value,
        ]


def cmd_sweep(args) -> int:
    try:
        config = SweepConfig(
            nu=complex(args.nu_re, args.nu_im), theta=args.theta,
            t_min=args.t_min, t_max=args.t_max, n_points=args.n,
            spacing=args.spacing, normalization=args.normalize,
            output_path=args.out,
        )
        rows = list(_sweep_rows(config))
    except (CutPlaneError, UnsupportedOrderError, ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        stream = open(config.output_path, "w", newline="") if config.output_path else sys.stdout
        try:
            writer = csv.writer(stream, lineterminator="\n")
            writer.writerow(_CSV_HEADER)
            writer.writerows(rows)
        finally:
            if config.output_path:
                stream.close()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _sample_cut_plane(rng, r_lo: float, r_hi: float, arg_limit: float = math.pi) -> complex:
    while True:
        r = rng.uniform(r_lo, r_hi)
        theta = rng.uniform(-arg_limit, arg_limit)
        z = r * cmath.exp(1j * theta)
        if not (z.imag == 0.0 and z.real <= 0.0):
            return z


def _check_exact_identity():
    rng = random.Random(101)
    worst = 0.0
    for _ in range(500):
        z = _sample_cut_plane(rng, 0.1, 25.0)
        worst = max(worst, abs(deviation(-0.5, z).deviation))
    return worst <= 1e-12, f"max (pi|z|/2)|J^2+J^2 - 2/(pi z)| = {worst:.3e} (bound 1e-12)"


def _check_real_axis_decay(orders):
    ok = True
    details = []
    for nu in orders:
        fit = real_axis_decay_check(nu, 10.0, 1000.0, 400)
        if fit.exact_zero:
            good = fit.amplitude <= 1e-9
            details.append(f"nu={nu}: exact zero, sup t|D| = {fit.amplitude:.2e}")
        else:
            good = math.isfinite(fit.amplitude) and abs(fit.exponent + 1.0) <= 0.15
            if nu == 0.5:
                good = good and fit.amplitude <= 1.1
            details.append(
                f"nu={nu}: sup t|D| = {fit.amplitude:.4f}, envelope slope = {fit.exponent:+.3f}"
            )
        ok = ok and good
    return ok, "; ".join(details)


def _imag_axis_limit_form(t: float) -> float:
    return (1.0 - math.exp(-2.0 * t)) ** 2 / (2.0 * t) - 1.0 + math.exp(-4.0 * t)


def _check_imag_axis():
    ok = True
    details = []
    for t in (20.0, 100.0):
        target = _imag_axis_limit_form(t)
        direct = imag_axis_normalized_direct(t)
        scaled = imag_axis_normalized(t)
        err = max(abs(direct - target), abs(scaled - target)) / abs(target)
        ok = ok and err <= 1e-12
        details.append(f"t={t:g}: value = {scaled:.15f}, rel err = {err:.2e}")
    return ok, "; ".join(details)


def _check_rays():
    ok = True
    details = []
    for theta in (math.pi / 6, math.pi / 4, math.pi / 2, 3 * math.pi / 4):
        gap = abs(ray_factor(theta, 40.0) + 1j)
        ok = ok and gap <= 0.05
        details.append(f"|F({theta:.4f}, 40) + i| = {gap:.4f}")
    theta = math.pi / 4
    d20 = deviation(0.5, 20.0 * cmath.exp(1j * theta)).log_abs_deviation
    d40 = deviation(0.5, 40.0 * cmath.exp(1j * theta)).log_abs_deviation
    expected = 2.0 * 20.0 * math.sin(theta) - math.log(2.0)
    rel = abs((d40 - d20) - expected) / abs(expected)
    ok = ok and rel <= 0.02
    details.append(f"growth-rate rel dev = {rel:.2e}")
    return ok, "; ".join(details)


def _check_two_routes():
    rng = random.Random(202)
    worst_sa = 0.0
    for nu in (0.0, 1.0, 2.0, complex(1, 1)):
        for _ in range(50):
            z = _sample_cut_plane(rng, 15.0, 30.0, 3 * math.pi / 4)
            a = bessel_j(nu, z, method="series").value
            b = bessel_j(nu, z, method="asym").value
            worst_sa = max(worst_sa, abs(a - b) / max(abs(a), abs(b)))
    worst_sc = 0.0
    for nu, code in ((-0.5, -1), (0.5, 1), (1.5, 3)):
        for _ in range(50):
            z = _sample_cut_plane(rng, 0.1, 15.0)
            a = bessel_j(nu, z, method="series").value
            b = bessel_j_closed_half_odd(code, z)
            worst_sc = max(worst_sc, abs(a - b) / max(abs(a), abs(b)))
    ok = worst_sa <= 1e-8 and worst_sc <= 1e-11
    return ok, (f"series/asym worst rel = {worst_sa:.2e} (bound 1e-8); "
                f"series/closed worst rel = {worst_sc:.2e} (bound 1e-11)")


def _check_remainder_order():
    radii = (10.0, 30.0, 100.0, 300.0, 1000.0)
    ok = True
    details = []
    for p in (1, 2, 3):
        scaled = [abs(complex(r) ** (2 * p) * cs_remainder(0.0, complex(r), p))
                  for r in radii]
        top = scaled[-3:]
        spread = max(top) / min(top)
        ok = ok and spread < 10.0
        details.append(f"p={p}: spread = {spread:.3f}")
    return ok, "; ".join(details)


def _check_gamma():
    rng = random.Random(303)
    worst_rec = 0.0
    worst_ref = 0.0
    count = 0
    while count < 1000:
        w = complex(rng.uniform(-20, 20), rng.uniform(-20, 20))
        if abs(w) > 20:
            continue
        if min(abs(w - k) for k in range(-25, 26)) < 0.1:
            continue
        count += 1
        g = gamma(w)
        worst_rec = max(worst_rec, abs(gamma(w + 1) - w * g) / abs(gamma(w + 1)))
        worst_ref = max(worst_ref, abs(g * gamma(1 - w) * cmath.sin(math.pi * w) / math.pi - 1))
    point = abs(gamma(complex(1, 1)) - _GAMMA_ONE_PLUS_I) / abs(_GAMMA_ONE_PLUS_I)
    ok = worst_rec <= 1e-11 and worst_ref <= 1e-11 and point <= 1e-12
    return ok, (f"recurrence worst = {worst_rec:.2e}, reflection worst = {worst_ref:.2e}, "
                f"Gamma(1+i) rel err = {point:.2e}")


def cmd_verify(args) -> int:
    orders = tuple(args.nu) if args.nu else (0.0, 0.5, 1.0, complex(1, 1))
    checks = [
        ("exact-identity nu=-1/2", _check_exact_identity),
        ("real-axis decay O(1/t)", lambda: _check_real_axis_decay(orders)),
        ("imaginary-axis limit", _check_imag_axis),
        ("ray failure F -> -i", _check_rays),
        ("two-route consistency", _check_two_routes),
        ("remainder order", _check_remainder_order),
        ("gamma identities", _check_gamma),
    ]
    all_ok = True
    for name, check in checks:
        ok, detail = check()
        all_ok = all_ok and ok
        print(f"{'PASS' if ok else 'FAIL'}  {name:26s}  {detail}")
    return 0 if all_ok else 1


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="lommel",
        description="Bessel J for complex order on the cut plane, and checks "
                    "of the relation J_nu^2 + J_{nu+1}^2 ~ 2/(pi z).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate J_nu(z) at one point")
    p_eval.add_argument("--nu-re", type=float, default=0.0)
    p_eval.add_argument("--nu-im", type=float, default=0.0)
    p_eval.add_argument("--z-re", type=float, default=0.0)
    p_eval.add_argument("--z-im", type=float, default=0.0)
    p_eval.add_argument("--method", choices=["auto", "series", "asym", "closed"],
                        default="auto")
    p_eval.add_argument("--tol", type=float, default=1e-15)
    p_eval.set_defaults(func=cmd_eval)

    p_sweep = sub.add_parser("sweep", help="sample D along a ray, emit CSV")
    p_sweep.add_argument("--nu-re", type=float, default=0.5)
    p_sweep.add_argument("--nu-im", type=float, default=0.0)
    p_sweep.add_argument("--theta", type=_parse_angle, default=0.0,
                         help="ray angle; accepts floats or e.g. pi/4")
    p_sweep.add_argument("--t-min", type=float, default=10.0)
    p_sweep.add_argument("--t-max", type=float, default=1000.0)
    p_sweep.add_argument("--n", type=int, default=100)
    p_sweep.add_argument("--spacing", choices=["log", "linear"], default="log")
    p_sweep.add_argument("--normalize", choices=["none", "td", "imag", "rayf"],
                         default="none",
                         help="normalized column: D, t*D, 2t e^{-2t} D(it), or F(t, theta)")
    p_sweep.add_argument("--out", default=None, help="output path (default stdout)")
    p_sweep.set_defaults(func=cmd_sweep)

    p_verify = sub.add_parser("verify", help="run the built-in verification table")
    p_verify.add_argument("--nu", type=_parse_order, action="append", default=None,
                          help="order(s) for the real-axis decay check "
                               "(default: 0, 0.5, 1, 1+1j)")
    p_verify.set_defaults(func=cmd_verify)

    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
