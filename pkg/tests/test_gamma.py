import math

import mpmath as mp
import pytest
from hypothesis import given, settings, strategies as st

from specfun import gamma as G
from specfun.errors import DomainError, PoleError, RangeError

mp.mp.dps = 40

EG = G.EULER_GAMMA


class TestGamma:
    @pytest.mark.parametrize("x", [0.07, 0.5, 1.0, 2.5, 3.7, 6.0, 9.5, 42.1,
                                   99.5, 170.6, -0.5, -2.5, -9.9, -99.7, -170.5])
    def test_against_mpmath(self, x):
        ref = float(mp.gamma(x))
        assert abs(G.gamma(x) - ref) <= 1e-13 * abs(ref)

    def test_sqrt_pi(self):
        assert abs(G.gamma(0.5) - math.sqrt(math.pi)) < 1e-14

    def test_factorial(self):
        assert abs(G.gamma(6.0) - 120.0) < 120.0 * 1e-13

    def test_quadrature_oracle_at_3_7(self):
        # composite Simpson for the defining integral, 10^5 nodes on [0, 60]
        n = 100_000
        h = 60.0 / n
        f = lambda t: t ** 2.7 * math.exp(-t) if t > 0 else 0.0
        acc = f(0.0) + f(60.0)
        acc += 4.0 * math.fsum(f(h * i) for i in range(1, n, 2))
        acc += 2.0 * math.fsum(f(h * i) for i in range(2, n, 2))
        oracle = acc * h / 3.0
        assert abs(G.gamma(3.7) - oracle) < 1e-9 * oracle
        assert abs(G.gamma(3.7) - 4.170651784) < 5e-9

    @given(st.floats(0.5, 50.0))
    @settings(max_examples=300)
    def test_recurrence(self, x):
        assert abs(G.gamma(x + 1.0) - x * G.gamma(x)) <= 1e-12 * abs(x * G.gamma(x))

    def test_poles_and_overflow(self):
        for x in (0.0, -1.0, -7.0):
            with pytest.raises(PoleError):
                G.gamma(x)
        with pytest.raises(OverflowError):
            G.gamma(172.0)


class TestLogGamma:
    def test_values(self):
        assert abs(G.log_gamma(1.0)) < 1e-13
        assert abs(G.log_gamma(0.5) - math.log(math.sqrt(math.pi))) < 1e-14

    def test_recurrence_oracle_100_5(self):
        # climb from log_gamma(1.5) by the functional equation
        acc = G.log_gamma(1.5)
        x = 1.5
        while x < 100.0:
            acc += math.log(x)
            x += 1.0
        assert abs(G.log_gamma(100.5) - acc) < 1e-11

    @pytest.mark.parametrize("x", [1e-3, 0.2, 1.0, 5.5, 8.99, 9.01, 1e3, 1e6])
    def test_against_mpmath(self, x):
        ref = float(mp.loggamma(x))
        assert abs(G.log_gamma(x) - ref) <= max(1e-12, 4.0 * abs(ref) * 2.3e-16)

    def test_domain(self):
        with pytest.raises(DomainError):
            G.log_gamma(0.0)
        with pytest.raises(DomainError):
            G.log_gamma(-3.2)


class TestPsi:
    def test_digamma_at_small_integers(self):
        assert abs(G.digamma(1.0) + EG) < 1e-14
        assert abs(G.digamma(2.0) - (1.0 - EG)) < 1e-14

    def test_trigamma_direct_sum_oracle(self):
        # sum of 1/n^2 with integral-plus-midpoint tail correction
        n_terms = 20_000
        s = math.fsum(1.0 / (n * n) for n in range(1, n_terms + 1))
        tail = 1.0 / (n_terms + 0.5)  # integral of t^-2 from N+1/2
        oracle = s + tail
        assert abs(G.trigamma(1.0) - oracle) < 1e-9
        assert abs(G.trigamma(1.0) - 1.6449340668) < 1e-9

    @pytest.mark.parametrize("x", [0.01, 0.3, 1.0, 7.7, 9.99, 123.4, -0.5, -6.3])
    def test_against_mpmath(self, x):
        assert abs(G.digamma(x) - float(mp.digamma(x))) < 1e-12 * max(1.0, abs(float(mp.digamma(x))))
        ref = float(mp.polygamma(1, x))
        assert abs(G.trigamma(x) - ref) < 1e-12 * max(1.0, abs(ref))

    def test_poles(self):
        with pytest.raises(PoleError):
            G.digamma(-3.0)
        with pytest.raises(PoleError):
            G.trigamma(0.0)


class TestBeta:
    def test_values(self):
        assert abs(G.beta(1.0, 1.0) - 1.0) < 1e-13
        assert abs(G.beta(0.5, 0.5) - math.pi) < 1e-12 * math.pi

    def test_gamma_product_oracle(self):
        ref = G.gamma(2.5) * G.gamma(3.5) / G.gamma(6.0)
        assert abs(G.beta(2.5, 3.5) - ref) <= 1e-12 * ref

    def test_domain(self):
        with pytest.raises(DomainError):
            G.beta(-1.0, 2.0)


# the record the sixth-root correction must reproduce; two of the printed
# values (x = 6/12 and 11/12) are truncations, not roundings
THETA_RECORD = [
    (0.0, 0.9675), (1 / 12, 0.8071), (2 / 12, 0.6160), (3 / 12, 0.4867),
    (4 / 12, 0.4029), (5 / 12, 0.3509), (6 / 12, 0.3207), (7 / 12, 0.3058),
    (8 / 12, 0.3014), (9 / 12, 0.3041), (10 / 12, 0.3118), (11 / 12, 0.3227),
    (1.0, 0.3359),
]


class TestTheta:
    def test_at_zero(self):
        assert abs(G.theta(0.0) - 30.0 / math.pi ** 3) < 1e-15

    @pytest.mark.parametrize("x,printed", THETA_RECORD)
    def test_record(self, x, printed):
        gap = abs(G.theta(x) - printed)
        assert gap < 1.01e-4
        if x not in (0.5, 11 / 12):
            assert gap < 5e-5

    def test_truncated_entries_against_highprec(self):
        # 50-digit evaluations of the defining expression
        assert abs(G.theta(0.5) - 0.32076346195375402848) < 1e-9
        assert abs(G.theta(11 / 12) - 0.32276645044627221873) < 1e-9

    def test_limit_at_infinity(self):
        assert abs(G.theta(1e6) - 1.0) < 1e-4
        assert abs(G.theta(1e12) - 1.0) < 1e-10

    def test_switchover_is_seamless(self):
        lo = G.theta(10.0 - 1e-9)
        hi = G.theta(10.0 + 1e-9)
        assert abs(hi - lo) < 1e-8

    def test_against_highprec_midrange(self):
        frozen = {2.3: 0.55355713399634346108, 9.7: 0.86623759723689915572,
                  10.3: 0.87356991401724919354, 47.0: 0.97106891715910928453}
        for x, ref in frozen.items():
            assert abs(G.theta(x) - ref) < 2e-8

    @given(st.floats(0.0, 1e6))
    @settings(max_examples=300)
    def test_proper_fraction(self, x):
        assert 0.0 < G.theta(x) < 1.0

    def test_domain(self):
        with pytest.raises(DomainError):
            G.theta(-0.1)


class TestDeTemple:
    def test_n1(self):
        rec = G.detemple(1)
        assert rec.d_n == 1.0
        expected = 1.0 - EG - math.log(1.5)
        assert abs(rec.big_h - expected) < 1e-15

    def test_bracket_at_10(self):
        rec = G.detemple(10)
        assert 1.0 / 2904.0 < rec.r_minus_gamma < 1.0 / 2400.0

    def test_range_consistent_with_single(self):
        seq = list(G.detemple_range(80))
        for n in (1, 31, 32, 50, 80):
            one = G.detemple(n)
            assert abs(seq[n - 1].big_h - one.big_h) < 1e-13
            assert abs(seq[n - 1].r_n - one.r_n) < 1e-13

    def test_dn_converges_slower(self):
        for n in (2, 10, 100, 1000):
            rec = G.detemple(n)
            assert abs(rec.d_n - EG) > abs(rec.r_minus_gamma)

    def test_domain(self):
        with pytest.raises(DomainError):
            G.detemple(0)


class TestKaratsubaEulerGamma:
    def test_bound_k1(self):
        est = G.karatsuba_euler_gamma(1)
        assert abs(est.error_bound - (2.0 / math.factorial(12) + 2.0 * math.exp(-1))) < 1e-12
        assert abs(est.value - EG) <= est.error_bound

    def test_bound_k20(self):
        est = G.karatsuba_euler_gamma(20)
        assert abs(est.error_bound - 1.6489228979e-06) < 1e-13
        assert abs(est.value - EG) <= est.error_bound

    def test_convergence(self):
        e1 = abs(G.karatsuba_euler_gamma(1).value - EG)
        e20 = abs(G.karatsuba_euler_gamma(20).value - EG)
        assert e20 < e1

    def test_pair_arithmetic_survives_k30(self):
        # at k = 30 the alternating terms peak near e^30; plain binary64
        # accumulation would be ~1e-4 off
        est = G.karatsuba_euler_gamma(30)
        assert abs(est.value - EG) <= est.error_bound

    @pytest.mark.parametrize("k", [0, 201, 2.5])
    def test_range(self, k):
        with pytest.raises(RangeError):
            G.karatsuba_euler_gamma(k)


class TestRamanujanGamma:
    def test_zero_terms(self):
        ref = G.gamma(11.0)
        est = G.ramanujan_gamma(10.0, 0)
        assert abs(est.value - ref) / ref <= 1e-6

    def test_full_tail_and_monotonicity(self):
        ref = G.gamma(11.0)
        errs = [abs(G.ramanujan_gamma(10.0, t).value - ref) / ref for t in range(8)]
        assert errs[7] <= 1e-9
        assert all(errs[i] > errs[i + 1] for i in range(7))

    def test_asymptotic_ratio(self):
        x = 150.0
        ratio = G.ramanujan_gamma(x, 0).value / G.gamma(x + 1.0)
        assert abs(ratio - 1.0) < 1e-8

    def test_error_bound_is_honest_for_partial_tails(self):
        ref = G.gamma(11.0)
        for t in range(7):
            est = G.ramanujan_gamma(10.0, t)
            assert abs(est.value - ref) <= 30.0 * est.error_bound

    def test_domain(self):
        with pytest.raises(DomainError):
            G.ramanujan_gamma(0.5, 3)
        with pytest.raises(RangeError):
            G.ramanujan_gamma(10.0, 8)


class TestMonotoneQuotient:
    def test_exact_at_two(self):
        assert abs(G.mono_f(2.0) - 0.5) < 1e-13

    def test_limit_at_one(self):
        assert abs(G.mono_f(1.0) - (1.0 - EG)) < 1e-15
        assert abs(G.mono_f(1.0 + 1e-7) - G.mono_f(1.0 - 1e-7)) < 1e-7

    def test_increasing_below_one(self):
        assert G.mono_f(10.0) < G.mono_f(100.0) < 1.0

    def test_domain(self):
        with pytest.raises(DomainError):
            G.mono_f(-1.0)


class TestLemmas:
    def test_lemma_g_positive(self):
        for x in (-0.9, -0.5, 0.0, 1.0, 3.9, 100.0):
            assert G.lemma_g(x) > 0.0

    def test_lemma_g_against_long_sum(self):
        x = 2.0
        n = 10**6
        s = math.fsum((k - x) / (k + x) ** 3 for k in range(1, n + 1))
        u = n + 0.5
        s += 1.0 / (u + x) - x / (u + x) ** 2
        assert abs(G.lemma_g(x) - s) < 1e-9

    def test_lemma_h(self):
        assert G.lemma_h(0.0) == 0.0
        assert G.lemma_h(1.0) > 0.0
        # decreasing branch on (-1, 0]
        assert G.lemma_h(-0.5) > G.lemma_h(-0.25) > G.lemma_h(0.0)

    def test_domains(self):
        with pytest.raises(DomainError):
            G.lemma_g(-1.0)
        with pytest.raises(DomainError):
            G.lemma_h(-1.5)


def test_sixthroot_tail_coefficients_are_exact_rationals():
    from fractions import Fraction

    assert G.RAMANUJAN_TAIL_COEFFS == (
        Fraction(1, 30), Fraction(-11, 240), Fraction(79, 3360),
        Fraction(3539, 201600), Fraction(-9511, 403200),
        Fraction(-10051, 716800), Fraction(47474887, 1277337600),
    )


def test_constants_table():
    assert abs(G.CONSTANTS.euler_gamma - 0.5772156649) < 5e-11
    assert G.CONSTANTS.pi == math.pi
    assert abs(G.CONSTANTS.log2 - math.log(2.0)) == 0.0
    digits = "0.5772156649015328606065"
    assert abs(G.EULER_GAMMA - float(digits)) == 0.0
