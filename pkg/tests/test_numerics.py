import cmath
import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from lommel import (
    CutPlaneError,
    compensated_sum,
    principal_log,
    principal_pow,
    require_cut_plane,
)


def cut_plane_points(min_mod=1e-6, max_mod=1e6):
    return st.builds(
        cmath.rect,
        st.floats(min_value=math.log(min_mod), max_value=math.log(max_mod)).map(math.exp),
        st.floats(min_value=-math.pi + 1e-9, max_value=math.pi - 1e-9),
    ).filter(lambda z: not (z.imag == 0 and z.real <= 0))


class TestCutPlane:
    @pytest.mark.parametrize("z", [-1.0, -0.5, 0.0, complex(-3, 0), complex(-3, -0.0)])
    def test_rejects_cut(self, z):
        with pytest.raises(CutPlaneError):
            require_cut_plane(z)

    @pytest.mark.parametrize("z", [1.0, -1 + 1e-12j, 1j, -1j, complex(-5, 0.001)])
    def test_accepts_off_cut(self, z):
        assert require_cut_plane(z) == complex(z)

    @pytest.mark.parametrize("z", [complex(float("nan"), 0), complex(1, float("inf"))])
    def test_rejects_nonfinite(self, z):
        with pytest.raises(CutPlaneError):
            require_cut_plane(z)


class TestPrincipalLog:
    def test_log_one(self):
        assert principal_log(1.0) == 0

    def test_log_i(self):
        assert principal_log(1j) == pytest.approx(complex(0, math.pi / 2), abs=1e-15)

    def test_just_above_cut(self):
        # principal branch is continuous from above the cut
        v = principal_log(complex(-1.0, 1e-12))
        assert v.imag == pytest.approx(math.pi, abs=1e-9)

    @settings(max_examples=300, derandomize=True)
    @given(z=cut_plane_points())
    def test_arg_range(self, z):
        assert -math.pi < principal_log(z).imag < math.pi

    @settings(max_examples=300, derandomize=True)
    @given(z=cut_plane_points())
    def test_exp_log_roundtrip(self, z):
        back = cmath.exp(principal_log(z))
        assert abs(back - z) <= 1e-14 * abs(z)


class TestPrincipalPow:
    def test_sqrt_four(self):
        assert principal_pow(4.0, 0.5) == pytest.approx(2.0, rel=1e-15)

    def test_i_squared(self):
        assert principal_pow(1j, 2.0) == pytest.approx(-1.0, abs=1e-15)

    def test_e_to_the_i(self):
        v = principal_pow(math.e, 1j)
        assert v == pytest.approx(complex(math.cos(1), math.sin(1)), rel=1e-15)

    @settings(max_examples=200, derandomize=True)
    @given(z=cut_plane_points())
    def test_zero_exponent(self, z):
        assert principal_pow(z, 0.0) == 1.0

    @settings(max_examples=200, derandomize=True)
    @given(z=cut_plane_points())
    def test_unit_exponent(self, z):
        assert principal_pow(z, 1.0) == z

    def test_rejects_cut(self):
        with pytest.raises(CutPlaneError):
            principal_pow(-2.0, 0.5)


class TestCompensatedSum:
    def test_cancel(self):
        assert compensated_sum([1.0, -1.0]) == 0

    def test_recovers_small_addend(self):
        assert compensated_sum([1e16, 1.0, -1e16]) == 1.0

    def test_many_tenths(self):
        total = compensated_sum([0.1] * 10**4)
        assert abs(total - 1000.0) <= 1e-10

    def test_complex_parts_independent(self):
        total = compensated_sum([complex(1e16, 0.1)] + [complex(1, 0.1)] + [complex(-1e16, 0.1)])
        assert total.real == 1.0
        assert abs(total.imag - 0.3) < 1e-15

    def test_random_vs_fsum(self):
        rng = random.Random(5)
        values = [complex(rng.uniform(-1, 1) * 10 ** rng.randint(-8, 8),
                          rng.uniform(-1, 1) * 10 ** rng.randint(-8, 8))
                  for _ in range(500)]
        total = compensated_sum(values)
        exact = complex(math.fsum(v.real for v in values),
                        math.fsum(v.imag for v in values))
        assert abs(total - exact) <= 4e-16 * sum(abs(v) for v in values)

    def test_rejects_nonfinite(self):
        with pytest.raises(CutPlaneError):
            compensated_sum([1.0, complex(float("inf"), 0)])
