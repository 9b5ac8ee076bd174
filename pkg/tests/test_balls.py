import math

import pytest
from hypothesis import given, settings, strategies as st

from specfun import balls
from specfun.errors import RangeError

PI = math.pi


class TestVolumes:
    def test_low_dimensions(self):
        assert balls.ball_volume(0) == 1.0
        assert abs(balls.ball_volume(1) - 2.0) < 1e-14
        assert abs(balls.ball_volume(2) - PI) < 1e-13
        assert abs(balls.ball_volume(3) - 4.0 * PI / 3.0) < 1e-13

    def test_dimension_20_exact_form(self):
        # Omega_20 = pi^10 / 10!
        ref = PI ** 10 / math.factorial(10)
        assert abs(balls.ball_volume(20) - ref) <= 1e-12 * ref

    def test_high_dimension_no_overflow(self):
        # the volume itself underflows binary64 near n ~ 260; the log-space
        # value stays finite and exact all the way up
        assert balls.ball_volume(250) > 0.0
        assert balls.ball_volume(10_000) == 0.0
        lv = balls.log_ball_volume(10_000)
        assert math.isfinite(lv) and lv < -30_000.0

    def test_peak_then_decay(self):
        # Omega_n peaks at n = 5 and decreases from n = 7 on
        vols = [balls.ball_volume(n) for n in range(1, 12)]
        assert max(vols) == vols[4]
        assert all(vols[n] > vols[n + 1] for n in range(6, 10))

    def test_range(self):
        with pytest.raises(RangeError):
            balls.ball_volume(-1)
        with pytest.raises(RangeError):
            balls.ball_volume(10_001)


class TestSurface:
    def test_small_cases(self):
        assert abs(balls.sphere_area(1) - 2.0 * PI) < 1e-13
        assert abs(balls.sphere_area(2) - 4.0 * PI) < 1e-13
        assert abs(balls.sphere_area(9) - 10.0 * balls.ball_volume(10)) < 1e-13

    @given(st.integers(1, 250))
    @settings(max_examples=60)
    def test_surface_is_n_volume(self, n):
        geo = balls.ball_geometry(n)
        assert geo.surface == n * geo.volume
        assert geo.volume > 0.0


def _power_ratio(n):
    return math.exp(balls.log_ball_volume(n) - n / (n + 1.0) * balls.log_ball_volume(n + 1))


def _sqrt_shift(n):
    return 2.0 * PI * math.exp(2.0 * (balls.log_ball_volume(n - 1) - balls.log_ball_volume(n))) - n


def _quotient_exponent(n):
    num = 2.0 * balls.log_ball_volume(n) - balls.log_ball_volume(n - 1) - balls.log_ball_volume(n + 1)
    return num / math.log1p(1.0 / n)


def _difference_scaled(n):
    r1 = math.exp(balls.log_ball_volume(n + 1) - balls.log_ball_volume(n))
    r2 = math.exp(balls.log_ball_volume(n) - balls.log_ball_volume(n - 1))
    return ((n + 1) * r1 - n * r2) * math.sqrt(n)


A_POW = 2.0 / math.sqrt(PI)
B_POW = math.sqrt(math.e)
A_SQRT, B_SQRT = 0.5, PI / 2.0 - 1.0
ALPHA_Q = 2.0 - math.log(PI) / math.log(2.0)
BETA_Q = 0.5
A_DIFF = (4.0 - PI) * math.sqrt(2.0)
B_DIFF = math.sqrt(2.0 * PI) / 2.0


class TestSharpInequalities:
    def test_printed_digits_of_constants(self):
        assert abs(A_POW - 1.12837) < 1e-5
        assert abs(B_POW - 1.64872) < 1e-5
        assert abs(B_SQRT - 0.57079) < 1e-5
        assert abs(ALPHA_Q - 0.34850) < 1e-5
        assert abs(A_DIFF - 1.2139) < 1e-4
        assert abs(B_DIFF - 1.2533) < 1e-4

    def test_power_family(self):
        for n in range(1, 201):
            t = _power_ratio(n)
            assert t >= A_POW - 1e-12
            assert t <= B_POW + 1e-12

    def test_sqrt_family(self):
        for n in range(1, 201):
            c = _sqrt_shift(n)
            assert c >= A_SQRT - 1e-10
            assert c <= B_SQRT + 1e-10

    def test_quotient_family(self):
        for n in range(1, 201):
            e = _quotient_exponent(n)
            assert e >= ALPHA_Q - 1e-10
            assert e <= BETA_Q + 1e-10

    def test_difference_family(self):
        for n in range(2, 201):
            d = _difference_scaled(n)
            assert d >= A_DIFF - 1e-12
            assert d < B_DIFF

    def test_equality_points(self):
        assert abs(_power_ratio(1) - A_POW) < 1e-13
        assert abs(_sqrt_shift(1) - B_SQRT) < 1e-13
        assert abs(_quotient_exponent(1) - ALPHA_Q) < 1e-12
        assert abs(_difference_scaled(2) - A_DIFF) < 1e-13

    def test_sharpness_spot_checks(self):
        bump = 1e-3
        assert _power_ratio(1) < A_POW * (1.0 + bump)
        assert _sqrt_shift(1) > B_SQRT * (1.0 - bump)
        assert _quotient_exponent(1) < ALPHA_Q * (1.0 + bump)
        assert _difference_scaled(2) < A_DIFF * (1.0 + bump)
        assert any(_difference_scaled(n) > B_DIFF * (1.0 - bump) for n in range(2, 201))


class TestAsymptoticShape:
    def test_root_power_decreasing_to_limit(self):
        prev = None
        for n in range(2, 201):
            v = math.exp(balls.log_ball_volume(n) / (n * math.log(n)))
            assert v > math.exp(-0.5)
            if prev is not None:
                assert v < prev
            prev = v
