import cmath
import math
import random
import struct

import pytest

from lommel import GammaConfig, PoleError, gamma, reciprocal_gamma

# Gamma(1+i) from the oracle below, frozen.
GAMMA_ONE_PLUS_I = complex(0.49801566811835607, -0.15494982830181067)

# B_2, B_4, ..., B_14
_BERNOULLI = (1 / 6, -1 / 30, 1 / 42, -1 / 30, 5 / 66, -691 / 2730, 7 / 6)


def oracle_gamma(w: complex) -> complex:
    """Brute-force reference: recur up to Re >= 30, then the Stirling series.

    Good to ~1e-14 relative; independent of the rational-approximation
    route under test.
    """
    w = complex(w)
    shifted = w
    divisor = complex(1.0)
    while shifted.real < 30:
        divisor *= shifted
        shifted += 1
    log_gamma = (shifted - 0.5) * cmath.log(shifted) - shifted + 0.5 * math.log(2 * math.pi)
    for n, b in enumerate(_BERNOULLI, start=1):
        log_gamma += b / ((2 * n) * (2 * n - 1) * shifted ** (2 * n - 1))
    return cmath.exp(log_gamma) / divisor


def _ulps(x: float) -> int:
    n = struct.unpack("<q", struct.pack("<d", x))[0]
    return ~(n + 2**63) if n < 0 else n


def ulps_apart(a: float, b: float) -> int:
    return abs(_ulps(a) - _ulps(b))


def random_off_pole(rng, radius=20.0, pole_distance=0.1):
    while True:
        w = complex(rng.uniform(-radius, radius), rng.uniform(-radius, radius))
        if abs(w) > radius:
            continue
        if min(abs(w + k) for k in range(0, int(radius) + 5)) < pole_distance:
            continue
        return w


class TestGammaValues:
    def test_one(self):
        assert gamma(1.0) == pytest.approx(1.0, rel=1e-15)

    def test_factorial(self):
        assert gamma(5.0) == pytest.approx(24.0, rel=1e-15)

    def test_half(self):
        assert gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-15)

    def test_one_plus_i_against_oracle(self):
        live = oracle_gamma(1 + 1j)
        assert abs(live - GAMMA_ONE_PLUS_I) <= 1e-13 * abs(live)
        assert abs(gamma(1 + 1j) - live) <= 1e-12 * abs(live)

    def test_oracle_agrees_broadly(self):
        rng = random.Random(11)
        for _ in range(100):
            w = random_off_pole(rng)
            ref = oracle_gamma(w)
            assert abs(gamma(w) - ref) <= 1e-12 * abs(ref)


class TestGammaPoles:
    @pytest.mark.parametrize("w", [0.0, -1.0, -2.0, -7.0])
    def test_pole_error(self, w):
        with pytest.raises(PoleError):
            gamma(w)

    def test_within_one_ulp(self):
        with pytest.raises(PoleError):
            gamma(complex(-3.0 + math.ulp(3.0) / 2, 0.0))

    def test_near_but_not_at_pole(self):
        assert abs(gamma(-3.0 + 1e-8)) > 1e7


class TestReciprocalGamma:
    @pytest.mark.parametrize("w", [0.0, -1.0, -3.0, -10.0])
    def test_zero_at_poles(self, w):
        assert reciprocal_gamma(w) == 0

    def test_two(self):
        assert reciprocal_gamma(2.0) == pytest.approx(1.0, rel=1e-15)

    def test_finite_near_poles(self):
        rng = random.Random(13)
        for _ in range(200):
            k = rng.randint(0, 15)
            eps = rng.uniform(-0.09, 0.09)
            w = complex(-k + eps, rng.uniform(-0.09, 0.09))
            v = reciprocal_gamma(w)
            assert math.isfinite(v.real) and math.isfinite(v.imag)

    def test_matches_one_over_gamma(self):
        rng = random.Random(17)
        for _ in range(200):
            w = random_off_pole(rng)
            assert reciprocal_gamma(w) == pytest.approx(1.0 / gamma(w), rel=1e-13)


class TestGammaIdentities:
    def test_recurrence(self):
        rng = random.Random(19)
        for _ in range(1000):
            w = random_off_pole(rng)
            lhs = gamma(w + 1)
            rhs = w * gamma(w)
            assert abs(lhs - rhs) <= 1e-12 * abs(lhs)

    def test_reflection(self):
        rng = random.Random(23)
        for _ in range(1000):
            w = random_off_pole(rng)
            if abs(w.imag) < 0.05 and abs(w.real - round(w.real)) < 0.1:
                continue
            residual = gamma(w) * gamma(1 - w) * cmath.sin(math.pi * w) / math.pi - 1.0
            assert abs(residual) <= 1e-11

    def test_conjugate_symmetry(self):
        rng = random.Random(29)
        for _ in range(300):
            w = random_off_pole(rng)
            a = gamma(w.conjugate())
            b = gamma(w).conjugate()
            assert ulps_apart(a.real, b.real) <= 2
            assert ulps_apart(a.imag, b.imag) <= 2


class TestGammaConfig:
    def test_rejects_empty_coefficients(self):
        with pytest.raises(ValueError):
            GammaConfig(shift=5.0, coefficients=())

    def test_rejects_nonpositive_shift(self):
        with pytest.raises(ValueError):
            GammaConfig(shift=0.0, coefficients=(1.0,))
