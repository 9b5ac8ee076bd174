"""Check registry, grid execution, and report serialization.

Every identity, inequality, bracket, and shape property asserted by the
library is registered here as a CheckSpec and executed over a grid.
Check kinds:

* identity     — evaluator returns a residual; pass iff max |residual| <= tol.
* inequality   — evaluator returns a signed margin (>= 0 means satisfied);
                 pass iff no margin drops below -tol.  Bracket checks use
                 the same convention with margin = min(v - lo, hi - v).
* monotonicity — evaluator returns the sequence value; adjacent
                 differences may not fall below -tol relative.
* convexity    — same with second differences (uniform grids only).

Evaluators are pure and draws are generated from fixed seeds, so rerunning
a suite is deterministic; results are sorted by check id.
"""

from __future__ import annotations

import io
import csv
import json
import math
import random
import time
from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Callable, Optional, Union

from . import balls, elliptic, gamma, hyper, modular
from .errors import DomainError
from .kernel import Grid, derivative

__all__ = [
    "CheckSpec",
    "CheckResult",
    "Report",
    "SUITES",
    "build_checks",
    "run_check",
    "run_suite",
    "serialize",
    "parse_report",
]

SUITES = ("gamma", "balls", "hyper", "elliptic", "modular")

_KINDS = ("identity", "inequality", "monotonicity", "convexity", "bracket")


@dataclass(frozen=True)
class CheckSpec:
    id: str
    anchor: str
    kind: str
    grid: Union[Grid, tuple]
    tolerance: float
    evaluator: Callable[[float], float]
    integer_points: bool = False
    note: str = ""

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise DomainError(f"unknown check kind {self.kind!r}")
        if not self.tolerance > 0.0:
            raise DomainError("tolerance must be positive")


@dataclass(frozen=True)
class CheckResult:
    id: str
    passed: bool
    max_residual: float
    argmax: float
    points: int
    elapsed_ms: float


@dataclass(frozen=True)
class Report:
    created_at: str
    suite: str
    results: tuple
    summary: dict


def _points_for(spec: CheckSpec, grid_n: Optional[int]):
    if isinstance(spec.grid, Grid):
        g = spec.grid if grid_n is None else spec.grid.with_n(max(2, int(grid_n)))
        pts = g.points()
    else:
        pts = list(spec.grid)
    if spec.integer_points:
        seen = []
        last = None
        for p in pts:
            q = int(round(p))
            if q != last:
                seen.append(q)
                last = q
        pts = seen
    return pts


def run_check(spec: CheckSpec, grid_n: Optional[int] = None, tol_scale: float = 1.0) -> CheckResult:
    pts = _points_for(spec, grid_n)
    tol = spec.tolerance * tol_scale
    t0 = time.perf_counter()
    if spec.kind in ("identity", "inequality", "bracket"):
        max_res = -1.0
        argmax = pts[0]
        for p in pts:
            v = spec.evaluator(p)
            res = abs(v) if spec.kind == "identity" else max(0.0, -v)
            if res > max_res:
                max_res, argmax = res, p
        max_res = max(max_res, 0.0)
    else:
        vals = [spec.evaluator(p) for p in pts]
        max_res = 0.0
        argmax = pts[0]
        if spec.kind == "monotonicity":
            for i in range(1, len(vals)):
                scale = max(1.0, abs(vals[i]), abs(vals[i - 1]))
                res = (vals[i - 1] - vals[i]) / scale
                if res > max_res:
                    max_res, argmax = res, pts[i]
        else:
            for i in range(1, len(vals) - 1):
                scale = max(1.0, abs(vals[i]))
                res = -(vals[i + 1] - 2.0 * vals[i] + vals[i - 1]) / scale
                if res > max_res:
                    max_res, argmax = res, pts[i]
    elapsed_ms = (time.perf_counter() - t0) * 1e3
    return CheckResult(
        id=spec.id,
        passed=max_res <= tol,
        max_residual=max_res,
        argmax=float(argmax),
        points=len(pts),
        elapsed_ms=elapsed_ms,
    )


# ---------------------------------------------------------------------------
# gamma suite


def _max_over(param_sets, fn):
    def ev(x):
        return max(abs(fn(params, x)) for params in param_sets)

    return ev


def _build_gamma():
    checks = []
    eg = gamma.EULER_GAMMA

    def recurrence_rel(x):
        return gamma.gamma(x + 1.0) / (x * gamma.gamma(x)) - 1.0

    checks.append(CheckSpec(
        "gamma.recurrence", "Gamma(x+1) = x Gamma(x)", "identity",
        Grid(0.5, 50.0, 1000, "logarithmic"), 1e-12, recurrence_rel,
    ))

    def interval_bounds(x):
        g = gamma.gamma(x)
        lo = x ** ((1.0 - eg) * x - 1.0)
        hi = x ** (x - 1.0)
        return min((g - lo) / g, (hi - g) / g)

    checks.append(CheckSpec(
        "gamma.interval_bounds", "x^((1-g)x-1) < Gamma(x) < x^(x-1) on (1,100]",
        "inequality", Grid(1.005, 100.0, 200), 1e-12, interval_bounds,
    ))

    _A01 = 1.0 - eg
    _B01 = 0.5 * (math.pi ** 2 / 6.0 - eg)

    def alzer_unit(x):
        g = gamma.gamma(x)
        lo = x ** (_A01 * (x - 1.0) - eg)
        hi = x ** (_B01 * (x - 1.0) - eg)
        return min((g - lo) / g, (hi - g) / g)

    checks.append(CheckSpec(
        "gamma.alzer_unit_interval",
        "x^(a(x-1)-g) < Gamma(x) < x^(b(x-1)-g) on (0,1), a = 1-g, b = (pi^2/6-g)/2",
        "inequality", Grid(0.01, 0.99, 99), 1e-12, alzer_unit,
    ))

    def alzer_beyond(x):
        g = gamma.gamma(x)
        lo = x ** (_B01 * (x - 1.0) - eg)
        hi = x ** (1.0 * (x - 1.0) - eg)
        return min((g - lo) / g, (hi - g) / g)

    checks.append(CheckSpec(
        "gamma.alzer_beyond_one",
        "x^(a(x-1)-g) < Gamma(x) < x^(x-1-g) on (1,inf), a = (pi^2/6-g)/2",
        "inequality", Grid(1.005, 100.0, 200), 1e-12, alzer_beyond,
    ))

    table = _theta_record()

    def theta_row(i):
        x, printed = table[int(round(i))]
        return gamma.theta(x) - printed

    checks.append(CheckSpec(
        "gamma.theta_table", "sixth-root correction reproduces the 14-entry record",
        "identity", tuple(range(len(table))), 1.01e-4, theta_row,
        note="two recorded entries (x = 6/12, 11/12) are truncated rather than "
             "rounded in the source, so their gaps sit just above 5e-5",
    ))

    def theta_window(x):
        t = gamma.theta(x) / 30.0
        return min(t - 0.01, 1.0 / 30.0 - t)

    checks.append(CheckSpec(
        "gamma.theta_growth_range", "theta/30 in (1/100, 1/30) on [1, 500]",
        "inequality", Grid(1.0, 500.0, 500), 1e-12, theta_window,
    ))
    checks.append(CheckSpec(
        "gamma.theta_growth_mono", "theta increasing on [1, 500]",
        "monotonicity", Grid(1.0, 500.0, 500), 1e-12, gamma.theta,
    ))

    cache = {}

    def _detemple_cached(n):
        if not cache:
            for rec in gamma.detemple_range(10_000):
                cache[rec.n] = rec
        return cache[int(round(n))]

    def detemple_bracket(n):
        rec = _detemple_cached(n)
        n = rec.n
        hi = 1.0 / (24.0 * n * n)
        lo = 1.0 / (24.0 * (n + 1.0) ** 2)
        return min(rec.r_minus_gamma - lo, hi - rec.r_minus_gamma) / hi

    checks.append(CheckSpec(
        "gamma.detemple_bracket", "1/(24(n+1)^2) < R_n - g < 1/(24 n^2), n = 1..10^4",
        "bracket", Grid(1, 10_000, 10_000), 1e-12, detemple_bracket, integer_points=True,
    ))
    checks.append(CheckSpec(
        "gamma.bigh_monotone", "n^2 (R_n - g) strictly increasing, n = 1..10^4",
        "monotonicity", Grid(1, 10_000, 10_000), 1e-12,
        lambda n: _detemple_cached(n).big_h, integer_points=True,
    ))
    checks.append(CheckSpec(
        "gamma.bigh_below_cap", "n^2 (R_n - g) < 1/24",
        "inequality", Grid(1, 10_000, 10_000), 1e-12,
        lambda n: 1.0 / 24.0 - _detemple_cached(n).big_h, integer_points=True,
    ))

    def karatsuba_margin(k):
        est = gamma.karatsuba_euler_gamma(int(round(k)))
        return (est.error_bound - abs(est.value - eg)) / est.error_bound

    checks.append(CheckSpec(
        "gamma.karatsuba_bound", "|estimate - g| <= c_k = 2/(12k)! + 2k^2 e^-k",
        "inequality", (1, 5, 10, 20), 1e-12, karatsuba_margin,
    ))

    def ramanujan_err(i):
        x = 10.0
        ref = gamma.gamma(x + 1.0)
        est = gamma.ramanujan_gamma(x, int(round(i)))
        return -math.log10(max(abs(est.value - ref) / ref, 1e-300))

    checks.append(CheckSpec(
        "gamma.ramanujan_terms_decreasing",
        "sixth-root expansion error shrinks with every added tail coefficient at x = 10",
        "monotonicity", tuple(range(8)), 1e-12, ramanujan_err,
    ))

    def ramanujan_seven(x):
        ref = gamma.gamma(x + 1.0)
        est = gamma.ramanujan_gamma(x, 7)
        return (1e-9 - abs(est.value - ref) / ref) / 1e-9

    checks.append(CheckSpec(
        "gamma.ramanujan_seven_terms", "full seven-coefficient tail reaches 1e-9 at x >= 10",
        "inequality", (10.0, 20.0, 50.0), 1e-12, ramanujan_seven,
    ))

    checks.append(CheckSpec(
        "gamma.mono_f_increasing", "log Gamma(x+1)/(x log x) increasing",
        "monotonicity", Grid(1.02, 200.0, 300, "logarithmic"), 1e-12, gamma.mono_f,
    ))
    checks.append(CheckSpec(
        "gamma.mono_f_concave", "log Gamma(x+1)/(x log x) concave beyond 1",
        "convexity", Grid(1.02, 200.0, 200), 1e-10, lambda x: -gamma.mono_f(x),
    ))
    checks.append(CheckSpec(
        "gamma.mono_f_range", "mono_f maps (1, inf) into (1-g, 1)",
        "inequality", Grid(1.02, 200.0, 200), 1e-12,
        lambda x: min(gamma.mono_f(x) - (1.0 - eg), 1.0 - gamma.mono_f(x)),
    ))
    checks.append(CheckSpec(
        "gamma.lemma_g_positive", "sum (n-x)/(n+x)^3 > 0 for x > -1",
        "inequality", Grid(-0.999, 100.0, 120), 1e-12, gamma.lemma_g,
    ))
    checks.append(CheckSpec(
        "gamma.lemma_h_nonnegative", "x^2 Psi'(1+x) - x Psi(1+x) + log Gamma(1+x) >= 0",
        "inequality", Grid(-0.999, 20.0, 100), 1e-12, gamma.lemma_h,
    ))

    def dn_slower(n):
        rec = gamma.detemple(int(round(n)))
        return abs(rec.d_n - eg) - abs(rec.r_minus_gamma)

    checks.append(CheckSpec(
        "gamma.dn_slower_than_rn", "|D_n - g| > |R_n - g| for n = 2..1000",
        "inequality", Grid(2, 1000, 500), 1e-12, dn_slower, integer_points=True,
    ))
    return checks


def _theta_record():
    xs = [0.0] + [k / 12.0 for k in range(1, 12)] + [1.0, 1e6]
    printed = [0.9675, 0.8071, 0.6160, 0.4867, 0.4029, 0.3509, 0.3207,
               0.3058, 0.3014, 0.3041, 0.3118, 0.3227, 0.3359, 1.0]
    return list(zip(xs, printed))


# ---------------------------------------------------------------------------
# balls suite

_BALL_A = 2.0 / math.sqrt(math.pi)
_BALL_B = math.sqrt(math.e)
_BALL_SQRT_A = 0.5
_BALL_SQRT_B = math.pi / 2.0 - 1.0
_BALL_ALPHA = 2.0 - math.log(math.pi) / math.log(2.0)
_BALL_BETA = 0.5
_BALL_DIFF_A = (4.0 - math.pi) * math.sqrt(2.0)
_BALL_DIFF_B = math.sqrt(2.0 * math.pi) / 2.0


def _power_ratio(n):
    return math.exp(balls.log_ball_volume(n) - n / (n + 1.0) * balls.log_ball_volume(n + 1))


def _sqrt_shift(n):
    return 2.0 * math.pi * math.exp(2.0 * (balls.log_ball_volume(n - 1) - balls.log_ball_volume(n))) - n


def _quotient_exponent(n):
    num = 2.0 * balls.log_ball_volume(n) - balls.log_ball_volume(n - 1) - balls.log_ball_volume(n + 1)
    return num / math.log1p(1.0 / n)


def _difference_scaled(n):
    r1 = math.exp(balls.log_ball_volume(n + 1) - balls.log_ball_volume(n))
    r2 = math.exp(balls.log_ball_volume(n) - balls.log_ball_volume(n - 1))
    return ((n + 1) * r1 - n * r2) * math.sqrt(n)


def _build_balls():
    checks = []
    ig = dict(integer_points=True)

    checks.append(CheckSpec(
        "balls.volume_decreasing", "Omega_n decreases to 0 from n = 7 on",
        "monotonicity", Grid(7, 200, 194), 1e-12,
        lambda n: -balls.log_ball_volume(int(round(n))), **ig,
    ))
    checks.append(CheckSpec(
        "balls.surface_decreasing", "omega_n decreases to 0 from n = 7 on",
        "monotonicity", Grid(7, 200, 194), 1e-12,
        lambda n: -(math.log(int(round(n)) + 1) + balls.log_ball_volume(int(round(n)) + 1)), **ig,
    ))
    checks.append(CheckSpec(
        "balls.root_power_decreasing", "Omega_n^(1/(n log n)) decreasing",
        "monotonicity", Grid(2, 200, 199), 1e-12,
        lambda n: -math.exp(balls.log_ball_volume(int(round(n))) / (int(round(n)) * math.log(int(round(n))))),
        **ig,
    ))
    checks.append(CheckSpec(
        "balls.root_power_above_limit", "Omega_n^(1/(n log n)) > e^(-1/2)",
        "inequality", Grid(2, 200, 199), 1e-12,
        lambda n: math.exp(balls.log_ball_volume(int(round(n))) / (int(round(n)) * math.log(int(round(n))))) - math.exp(-0.5),
        **ig,
    ))
    checks.append(CheckSpec(
        "balls.alzer_power", "a Om_(n+1)^(n/(n+1)) <= Om_n <= b Om_(n+1)^(n/(n+1)), a = 2/sqrt(pi), b = sqrt(e)",
        "inequality", Grid(1, 200, 200), 1e-12,
        lambda n: min(_power_ratio(int(round(n))) - _BALL_A, _BALL_B - _power_ratio(int(round(n)))), **ig,
    ))
    checks.append(CheckSpec(
        "balls.alzer_sqrt", "sqrt((n+1/2)/2pi) <= Om_(n-1)/Om_n <= sqrt((n+pi/2-1)/2pi)",
        "inequality", Grid(1, 200, 200), 1e-10,
        lambda n: min(_sqrt_shift(int(round(n))) - _BALL_SQRT_A, _BALL_SQRT_B - _sqrt_shift(int(round(n)))), **ig,
    ))
    checks.append(CheckSpec(
        "balls.alzer_quotient", "(1+1/n)^a <= Om_n^2/(Om_(n-1)Om_(n+1)) <= (1+1/n)^(1/2), a = 2 - log pi/log 2",
        "inequality", Grid(1, 200, 200), 1e-10,
        lambda n: min(_quotient_exponent(int(round(n))) - _BALL_ALPHA, _BALL_BETA - _quotient_exponent(int(round(n)))), **ig,
    ))
    checks.append(CheckSpec(
        "balls.alzer_difference", "A/sqrt(n) <= (n+1)Om_(n+1)/Om_n - n Om_n/Om_(n-1) < B/sqrt(n)",
        "inequality", Grid(2, 200, 199), 1e-12,
        lambda n: min(_difference_scaled(int(round(n))) - _BALL_DIFF_A, _BALL_DIFF_B - _difference_scaled(int(round(n)))), **ig,
    ))

    def sharpness_probe(i):
        i = int(round(i))
        bump = 1e-3
        if i == 0:   # lower constant of the power family, equality at n = 1
            return 0.0 if _power_ratio(1) - _BALL_A * (1.0 + bump) < 0.0 else 1.0
        if i == 1:   # upper constant of the sqrt family, equality at n = 1
            return 0.0 if _BALL_SQRT_B * (1.0 - bump) - _sqrt_shift(1) < 0.0 else 1.0
        if i == 2:   # lower exponent of the quotient family, equality at n = 1
            return 0.0 if _quotient_exponent(1) - _BALL_ALPHA * (1.0 + bump) < 0.0 else 1.0
        if i == 3:   # lower constant of the difference family, equality at n = 2
            return 0.0 if _difference_scaled(2) - _BALL_DIFF_A * (1.0 + bump) < 0.0 else 1.0
        # upper constant of the difference family: violated within n <= 200
        return 0.0 if any(
            _BALL_DIFF_B * (1.0 - bump) - _difference_scaled(n) < 0.0 for n in range(2, 201)
        ) else 1.0

    checks.append(CheckSpec(
        "balls.sharpness_spotcheck",
        "perturbing each sharp constant by 1e-3 in the favorable direction breaks it",
        "identity", (0, 1, 2, 3, 4), 0.5, sharpness_probe,
        note="the sqrt(e), A = 1/2 and beta = 1/2 constants are approached too "
             "slowly to violate within n <= 200; their perturbations are "
             "reported by the sharpness script as warnings instead",
    ))
    return checks


# ---------------------------------------------------------------------------
# hyper suite

_HP = hyper.HyperParams


def _build_hyper():
    checks = []
    trip = (_HP(0.5, 0.5, 1.0), _HP(1.3, 0.7, 1.5), _HP(0.3, 0.7, 1.2))

    def deriv_formula(p, z):
        lhs = derivative(lambda t: hyper.hyp2f1(p.a, p.b, p.c, t), z, order=1, domain=(0.0, 1.0))
        rhs = p.a * p.b / p.c * hyper.hyp2f1(p.a + 1.0, p.b + 1.0, p.c + 1.0, z)
        return lhs - rhs

    checks.append(CheckSpec(
        "hyper.derivative_formula", "dF/dz = (ab/c) F(a+1,b+1;c+1;z)",
        "identity", Grid(0.05, 0.7, 14), 1e-6, _max_over(trip, deriv_formula),
    ))

    one_probes = (_HP(0.1, 0.2, 1.0), _HP(0.3, 0.3, 1.4), _HP(0.25, 0.5, 1.6))

    def gauss_limit(i):
        p = one_probes[int(round(i))]
        x = 1.0 - 1e-6
        return hyper.hyp2f1(p.a, p.b, p.c, x, one_minus_x=1e-6) - hyper.gauss_value_at_one(p)

    checks.append(CheckSpec(
        "hyper.gauss_value_limit", "series limit at 1 matches the gamma quotient",
        "identity", (0, 1, 2), 1e-4, gauss_limit,
    ))

    zb_pairs = ((0.5, 0.5), (1.0 / 3.0, 2.0 / 3.0), (0.25, 0.25))

    def zero_balanced(i):
        a, b = zb_pairs[int(round(i))]
        w = 1e-6
        x = 1.0 - w
        gap = abs(
            gamma.beta(a, b) * hyper.hyp2f1(a, b, a + b, x, one_minus_x=w)
            + math.log(w) - hyper.ramanujan_R(a, b)
        )
        bound = 10.0 * w * abs(math.log(w))
        return 1.0 - gap / bound

    checks.append(CheckSpec(
        "hyper.zero_balanced_limit",
        "B(a,b) F(a,b;a+b;x) + log(1-x) -> R(a,b) with O((1-x)log(1-x)) gap",
        "inequality", (0, 1, 2), 1e-12, zero_balanced,
    ))
    checks.append(CheckSpec(
        "hyper.ramanujan_constant_half", "R(1/2,1/2) = log 16",
        "identity", (0.0,), 1e-12,
        lambda _: hyper.ramanujan_R(0.5, 0.5) - math.log(16.0),
    ))
    checks.append(CheckSpec(
        "hyper.qf_decreasing", "R(x,1-x) sin(pi x) decreasing on (0, 1/2]",
        "monotonicity", Grid(0.001, 0.5, 120), 1e-12,
        lambda x: -hyper.ramanujan_R(x, 1.0 - x) * math.sin(math.pi * x),
    ))

    for which, tol in (("d_u", 1e-6), ("d_v", 1e-6), ("shift_c", 1e-8),
                       ("sym_combo", 1e-6), ("b_shift", 1e-6)):
        checks.append(CheckSpec(
            f"hyper.contiguous_{which}", f"contiguous relation {which}",
            "identity", Grid(0.05, 0.95, 19), tol,
            _max_over(trip, lambda p, z, w=which: hyper.contiguous_residual(w, p, z)),
        ))

    ode_params = (_HP(0.7, 1.1, 1.3), _HP(0.5, 0.5, 1.0))

    def hyp_ode(p, z):
        f = lambda t: hyper.hyp2f1(p.a, p.b, p.c, t)
        d1 = derivative(f, z, order=1, domain=(0.0, 1.0))
        d2 = derivative(f, z, order=2, domain=(0.0, 1.0))
        return z * (1.0 - z) * d2 + (p.c - (p.a + p.b + 1.0) * z) * d1 - p.a * p.b * f(z)

    checks.append(CheckSpec(
        "hyper.hypergeometric_ode", "z(1-z)w'' + [c-(a+b+1)z]w' - ab w = 0",
        "identity", Grid(0.05, 0.95, 19), 1e-5, _max_over(ode_params, hyp_ode),
    ))

    sq_params = (_HP(0.6, 0.9, 1.25), _HP(0.5, 0.5, 1.0))

    def square_ode(p, z):
        f = lambda t: hyper.hyp2f1(p.a, p.b, p.c, t * t)
        d1 = derivative(f, z, order=1, domain=(0.0, 1.0))
        d2 = derivative(f, z, order=2, domain=(0.0, 1.0))
        return (
            z * (1.0 - z * z) * d2
            + (2.0 * p.c - 1.0 - (2.0 * p.a + 2.0 * p.b + 1.0) * z * z) * d1
            - 4.0 * p.a * p.b * z * f(z)
        )

    checks.append(CheckSpec(
        "hyper.ode_square_argument",
        "z(1-z^2)w'' + [2c-1-(2a+2b+1)z^2]w' - 4ab z w = 0 for w = F(a,b;c;z^2), 2c = a+b+1",
        "identity", Grid(0.05, 0.95, 19), 1e-5, _max_over(sq_params, square_ode),
    ))

    wr_params = (_HP(0.5, 0.5, 1.0), _HP(0.4, 0.8, 1.1))

    def wronskian_decay(p, z):
        w1 = lambda t: hyper.hyp2f1(p.a, p.b, p.c, t)
        w2 = lambda t: hyper.hyp2f1(p.a, p.b, p.c, 1.0 - t, one_minus_x=t)
        wr = w1(z) * derivative(w2, z, order=1, domain=(0.0, 1.0)) - w2(z) * derivative(
            w1, z, order=1, domain=(0.0, 1.0)
        )
        scaled = wr * z ** p.c * (1.0 - z) ** (p.a + p.b - p.c + 1.0)
        ref = -math.exp(2.0 * gamma.log_gamma(p.c) - gamma.log_gamma(p.a) - gamma.log_gamma(p.b))
        return scaled / ref - 1.0

    checks.append(CheckSpec(
        "hyper.wronskian_decay",
        "W(F(.;z), F(.;1-z)) z^c (1-z)^(a+b-c+1) is constant when 2c = a+b+1",
        "identity", Grid(0.1, 0.9, 17), 1e-6, _max_over(wr_params, wronskian_decay),
    ))

    cor_params = ((0.3, 1.2), (0.5, 1.0), (0.7, 1.5))

    def cor44(pair, z):
        a, c = pair
        return hyper.corollary44_value(a, c, z) - hyper.corollary44_reference(a, c)

    checks.append(CheckSpec(
        "hyper.corollary44", "u v1 + u1 v - v v1 equals its gamma quotient",
        "identity", Grid(0.1, 0.9, 17), 1e-9, _max_over(cor_params, cor44),
    ))

    def cor44_spread(i):
        a, c = cor_params[int(round(i))]
        vals = [hyper.corollary44_value(a, c, z) for z in (0.1, 0.3, 0.5, 0.7, 0.9)]
        return max(vals) - min(vals)

    checks.append(CheckSpec(
        "hyper.corollary44_spread", "the product combination is z-independent",
        "identity", (0, 1, 2), 2e-9, cor44_spread,
    ))

    combo_params = ((0.5, 0.5, 1.0), (0.4, 0.8, 1.1), (0.3, 1.9, 1.6))

    checks.append(CheckSpec(
        "hyper.wronskian_combo",
        "(c-a)(u v1 + u1 v) + (a-1) v v1 = [G(c)^2/(G(a)G(b))] (z(1-z))^(1-c)",
        "identity", Grid(0.05, 0.95, 19), 1e-9,
        _max_over(combo_params, lambda p, z: hyper.wronskian_combo_residual(*p, z)),
    ))

    elliott_draws = _elliott_draws(100)

    def elliott(i):
        a, b, c, x = elliott_draws[int(round(i))]
        return hyper.elliott_residual(a, b, c, x)

    checks.append(CheckSpec(
        "hyper.elliott", "F1 F2 + F3 F4 - F2 F3 equals its gamma quotient",
        "identity", tuple(range(len(elliott_draws))), 1e-9, elliott,
    ))

    kummer_params = ((0.5, 0.5, 0.5), (0.4, 0.6, 0.5), (0.9, 0.8, 0.7))

    checks.append(CheckSpec(
        "hyper.kummer", "Kummer's two-product closed form",
        "identity", Grid(0.05, 0.95, 50), 1e-8,
        _max_over(kummer_params, lambda p, x: hyper.kummer_residual(*p, x)),
    ))

    growth_pairs = ((0.5, 0.5), (0.25, 0.75))

    def k_of(pair, x):
        a, b = pair
        w = math.exp(-x)
        return hyper.hyp2f1(a, b, a + b, 1.0 - w, one_minus_x=w)

    checks.append(CheckSpec(
        "hyper.growth_exp_mono", "F(a,b;a+b;1-e^-x) increasing in x",
        "monotonicity", Grid(0.25, 20.0, 80), 1e-12,
        lambda x: sum(k_of(p, x) for p in growth_pairs),
    ))
    checks.append(CheckSpec(
        "hyper.growth_exp_convex", "F(a,b;a+b;1-e^-x) convex in x",
        "convexity", Grid(0.25, 20.0, 80), 1e-10,
        lambda x: sum(k_of(p, x) for p in growth_pairs),
    ))

    def growth_exp_endpoints(i):
        a, b = growth_pairs[int(round(i))]
        f = lambda x: k_of((a, b), x)
        lo = derivative(f, 0.001, order=1, step=2e-4)
        hi = derivative(f, 20.0, order=1, step=0.05)
        lo_ref = a * b / (a + b)
        hi_ref = math.exp(gamma.log_gamma(a + b) - gamma.log_gamma(a) - gamma.log_gamma(b))
        return max(abs(lo - lo_ref), abs(hi - hi_ref))

    checks.append(CheckSpec(
        "hyper.growth_exp_endpoints", "k' runs from ab/(a+b) to G(a+b)/(G(a)G(b))",
        "identity", (0, 1), 1e-3, growth_exp_endpoints,
    ))

    power_trips = ((0.9, 0.8, 0.5), (0.6, 0.9, 0.5))

    def l_of(trip_, x):
        a, b, c = trip_
        d = a + b - c
        w = (1.0 + x) ** (-1.0 / d)
        return hyper.hyp2f1(a, b, c, 1.0 - w, one_minus_x=w)

    checks.append(CheckSpec(
        "hyper.growth_power_mono", "F(a,b;c;1-(1+x)^(-1/d)) increasing in x",
        "monotonicity", Grid(0.25, 30.0, 60), 1e-12,
        lambda x: sum(l_of(p, x) for p in power_trips),
    ))
    checks.append(CheckSpec(
        "hyper.growth_power_convex", "F(a,b;c;1-(1+x)^(-1/d)) convex in x",
        "convexity", Grid(0.25, 30.0, 60), 1e-10,
        lambda x: sum(l_of(p, x) for p in power_trips),
    ))

    def growth_power_endpoints(i):
        a, b, c = power_trips[int(round(i))]
        d = a + b - c
        f = lambda x: l_of((a, b, c), x)
        lo = derivative(f, 0.001, order=1, step=2e-4)
        hi = derivative(f, 1e5, order=1, step=30.0)
        lo_ref = a * b / (c * d)
        hi_ref = math.exp(
            gamma.log_gamma(c) + gamma.log_gamma(d) - gamma.log_gamma(a) - gamma.log_gamma(b)
        )
        return max(abs(lo - lo_ref), abs(hi - hi_ref))

    checks.append(CheckSpec(
        "hyper.growth_power_endpoints", "l' runs from ab/(cd) to G(c)G(d)/(G(a)G(b))",
        "identity", (0, 1), 1e-3, growth_power_endpoints,
    ))

    f32_draws = _f32_draws(100)

    def f32(i):
        n, a, b, eps = f32_draws[int(round(i))]
        return hyper.f32_terminating(n, a, b, eps)

    checks.append(CheckSpec(
        "hyper.f32_positive", "terminating 3F2(-n,a,b;1+a+b,1+eps-n;1) > 0 in the eps window",
        "inequality", tuple(range(len(f32_draws))), 1e-12, f32,
    ))
    return checks


def _elliott_draws(count, seed=20259):
    rng = random.Random(seed)
    draws = []
    while len(draws) < count:
        a = rng.uniform(0.0, 0.45)
        b = rng.uniform(0.0, 1.2)
        c = rng.uniform(0.0, 0.45)
        x = rng.uniform(0.08, 0.92)
        # keep the near-one exponents of all four factors off the integers
        ok = True
        for expo in (a + b, b + c):
            if abs(expo - round(expo)) < 0.05:
                ok = False
        if ok:
            draws.append((a, b, c, x))
    return draws


def _f32_draws(count, seed=777):
    rng = random.Random(seed)
    draws = []
    while len(draws) < count:
        n = rng.randint(1, 50)
        a = rng.uniform(0.05, 2.0)
        b = rng.uniform(0.05, 2.0)
        lo = a * b / (1.0 + a + b)
        if lo >= 0.98:
            continue
        eps = rng.uniform(lo + 0.01 * (1.0 - lo), 0.99)
        draws.append((n, a, b, eps))
    return draws


# ---------------------------------------------------------------------------
# elliptic suite

_BATTERY_GRID = Grid(1e-4, 1.0 - 1e-4, 512, "atanh")
_ALZER_KLOG = math.pi / (4.0 * math.log(2.0)) - 1.0


def _klog_ratio(r):
    rp = math.sqrt((1.0 - r) * (1.0 + r))
    return elliptic.ellip_k(r) / math.log(4.0 / rp), rp


def _build_elliptic():
    checks = []

    def agm_vs_series(r):
        series = hyper.hyp2f1(0.5, 0.5, 1.0, r * r, one_minus_x=(1.0 - r) * (1.0 + r))
        return 2.0 / math.pi * elliptic.ellip_k(r) - series

    checks.append(CheckSpec(
        "elliptic.agm_vs_series", "(2/pi) K(r) = F(1/2,1/2;1;r^2), AGM against series",
        "identity", _BATTERY_GRID, 1e-12, agm_vs_series,
    ))
    checks.append(CheckSpec(
        "elliptic.legendre", "E K' + E' K - K K' = pi/2",
        "identity", Grid(0.01, 0.99, 99), 1e-12, elliptic.legendre_residual,
    ))

    gen_as = (1.0 / 6.0, 0.25, 1.0 / 3.0, 0.49)

    checks.append(CheckSpec(
        "elliptic.legendre_generalized",
        "e_a k_a' + e_a' k_a - k_a k_a' = pi sin(pi a)/(4(1-a))",
        "identity", Grid(0.02, 0.98, 64, "atanh"), 1e-10,
        lambda r: max(abs(elliptic.generalized_legendre_residual(a, r)) for a in gen_as),
    ))

    def arth_bounds(r):
        k = elliptic.ellip_k(r)
        base = math.atanh(r) / r
        lo = 0.5 * math.pi * math.sqrt(base)
        hi = 0.5 * math.pi * base
        return min((k - lo) / k, (hi - k) / k)

    checks.append(CheckSpec(
        "elliptic.arth_bounds", "(pi/2)(arth r/r)^(1/2) < K(r) < (pi/2) arth r/r",
        "inequality", _BATTERY_GRID, 1e-12, arth_bounds,
    ))

    def arth_refined(r):
        k = elliptic.ellip_k(r)
        return (k - 0.5 * math.pi * (math.atanh(r) / r) ** 0.75) / k

    checks.append(CheckSpec(
        "elliptic.arth_refined", "(pi/2)(arth r/r)^(3/4) < K(r), 3/4 the best exponent",
        "inequality", _BATTERY_GRID, 1e-12, arth_refined,
    ))

    def arth_exponent_sharp(_):
        grid = Grid(1e-5, 1.0 - 1e-5, 8192, "atanh")
        q = 0.75 + 1e-3
        for r in grid.points():
            if 0.5 * math.pi * (math.atanh(r) / r) ** q > elliptic.ellip_k(r):
                return 0.0
        return 1.0

    checks.append(CheckSpec(
        "elliptic.arth_exponent_sharp",
        "exponent 3/4 + 1e-3 already fails on a refined grid (near r -> 0)",
        "identity", (0.0,), 0.5, arth_exponent_sharp,
        note="the bound degrades at the origin, not at r -> 1: both sides expand "
             "as 1 + q r^2/3 versus 1 + r^2/4 there",
    ))

    checks.append(CheckSpec(
        "elliptic.klog_kuhnau_qiu", "9/(8+r^2) < K(r)/log(4/r')",
        "inequality", _BATTERY_GRID, 1e-12,
        lambda r: _klog_ratio(r)[0] - 9.0 / (8.0 + r * r),
    ))
    checks.append(CheckSpec(
        "elliptic.klog_qiu_vamanamurthy", "K(r)/log(4/r') < 1 + (r')^2/4",
        "inequality", _BATTERY_GRID, 1e-12,
        lambda r: 1.0 + 0.25 * (1.0 - r) * (1.0 + r) - _klog_ratio(r)[0],
    ))
    checks.append(CheckSpec(
        "elliptic.klog_alzer", "1 + (pi/(4 log 2) - 1)(r')^2 < K(r)/log(4/r')",
        "inequality", _BATTERY_GRID, 1e-12,
        lambda r: _klog_ratio(r)[0] - 1.0 - _ALZER_KLOG * (1.0 - r) * (1.0 + r),
    ))

    def ellipse_lower(r):
        rp = math.sqrt((1.0 - r) * (1.0 + r))
        return 2.0 / math.pi * elliptic.ellip_e(r) - ((1.0 + rp ** 1.5) / 2.0) ** (2.0 / 3.0)

    def ellipse_upper(r):
        rp2 = (1.0 - r) * (1.0 + r)
        return math.sqrt((1.0 + rp2) / 2.0) - 2.0 / math.pi * elliptic.ellip_e(r)

    checks.append(CheckSpec(
        "elliptic.ellipse_lower", "(2/pi)E(r) >= ((1+(r')^(3/2))/2)^(2/3) on [0,1]",
        "inequality", Grid(0.0, 1.0, 101), 1e-12, ellipse_lower,
    ))
    checks.append(CheckSpec(
        "elliptic.ellipse_upper", "(2/pi)E(r) <= ((1+(r')^2)/2)^(1/2) on [0,1]",
        "inequality", Grid(0.0, 1.0, 101), 1e-12, ellipse_upper,
    ))

    checks.append(CheckSpec(
        "elliptic.mu_decreasing", "the ring modulus decreases in r",
        "monotonicity", Grid(1e-4, 1.0 - 1e-4, 128, "atanh"), 1e-12,
        lambda r: -elliptic.mu(r),
    ))
    checks.append(CheckSpec(
        "elliptic.mu_a_decreasing", "the generalized ring modulus decreases in r",
        "monotonicity", Grid(1e-4, 1.0 - 1e-4, 128, "atanh"), 1e-12,
        lambda r: -(elliptic.mu_a(1.0 / 3.0, r) + elliptic.mu_a(0.15, r)),
    ))
    checks.append(CheckSpec(
        "elliptic.mu_symmetry_point", "mu_a(1/sqrt 2) = pi/(2 sin(pi a))",
        "identity", tuple(i / 20.0 for i in range(1, 20)), 1e-12,
        lambda a: elliptic.mu_a(a, math.sqrt(0.5)) - 0.5 * math.pi / math.sin(math.pi * a),
    ))

    phi_ps = (2.0, 5.0)
    phi_as = (0.5, 1.0 / 3.0)

    checks.append(CheckSpec(
        "elliptic.phi_below_identity", "phi^a_(1/p)(r) < r for p > 1",
        "inequality", Grid(0.05, 0.95, 64, "atanh"), 1e-12,
        lambda r: min(r - elliptic.phi_k_a(a, 1.0 / p, r) for a in phi_as for p in phi_ps),
    ))

    rt_ps = (2.0, 3.0, 5.0, 7.0, 11.0, 23.0)

    def phi_roundtrip(r):
        worst = 0.0
        for a in phi_as:
            for p in rt_ps:
                s = elliptic.phi_k_a(a, 1.0 / p, r)
                worst = max(worst, abs(elliptic.phi_k_a(a, p, s) - r))
        return worst

    checks.append(CheckSpec(
        "elliptic.phi_roundtrip", "phi^a_p inverts phi^a_(1/p)",
        "identity", Grid(0.05, 0.95, 32, "atanh"), 1e-9, phi_roundtrip,
    ))
    checks.append(CheckSpec(
        "elliptic.beta_below_alpha", "solved modulus stays below the input for p > 1",
        "inequality", Grid(0.05, 0.95, 32, "atanh"), 1e-12,
        lambda r: min(
            r * r - elliptic.phi_k_a(a, 1.0 / p, r) ** 2 for a in phi_as for p in (2.0, 3.0, 5.0)
        ),
    ))

    ode_as = (0.5, 1.0 / 3.0, 0.25)
    for which in elliptic.ODE_IDS:
        checks.append(CheckSpec(
            f"elliptic.{which}", f"second-order ODE residual for {which}",
            "identity", Grid(0.06, 0.94, 15), 1e-5,
            lambda r, w=which: max(abs(elliptic.ode_residual(w, a, r)) for a in ode_as),
        ))

    checks.append(CheckSpec(
        "elliptic.schwarzian", "Schwarzian of mu_a matches its closed form",
        "identity", Grid(0.15, 0.85, 8), 1e-3,
        lambda r: max(abs(elliptic.schwarzian_residual(a, r)) for a in (0.5, 0.25)),
    ))

    def schwarzian_decay(_):
        h = 1e-2 * 0.25
        r1 = abs(elliptic.schwarzian_residual(0.5, 0.5, step=h))
        r2 = abs(elliptic.schwarzian_residual(0.5, 0.5, step=h / 2.0))
        return r1 / r2 - 3.0

    checks.append(CheckSpec(
        "elliptic.schwarzian_step_decay", "halving the stencil step cuts the residual >= 3x",
        "inequality", (0.0,), 1e-12, schwarzian_decay,
    ))

    def e_a_continuity(a):
        closed = elliptic.e_a(a, 1.0)
        return elliptic.e_a(a, 1.0 - 1e-8) - closed

    checks.append(CheckSpec(
        "elliptic.e_a_endpoint", "e_a(r) -> sin(pi a)/(2(1-a)) as r -> 1",
        "identity", tuple(i / 20.0 for i in range(2, 19)), 1e-5, e_a_continuity,
    ))
    return checks


# ---------------------------------------------------------------------------
# modular suite


def _build_modular():
    checks = []
    for iid in modular.IDENTITY_IDS:
        identity = modular.get_identity(iid)
        checks.append(CheckSpec(
            f"modular.{iid}", identity.anchor,
            "identity", Grid(0.05, 0.95, 64, "atanh"), 1e-6,
            lambda r, i=iid: modular.identity_residual(i, r),
        ))
    return checks


_BUILDERS = {
    "gamma": _build_gamma,
    "balls": _build_balls,
    "hyper": _build_hyper,
    "elliptic": _build_elliptic,
    "modular": _build_modular,
}


def build_checks(suite: str = "all"):
    if suite == "all":
        specs = []
        for name in SUITES:
            specs.extend(_BUILDERS[name]())
        return specs
    if suite not in _BUILDERS:
        raise DomainError(f"unknown suite {suite!r}; use one of {('all',) + SUITES}")
    return _BUILDERS[suite]()


def run_suite(suite: str = "all", grid_n: Optional[int] = None, tol_scale: float = 1.0) -> Report:
    specs = build_checks(suite)
    results = sorted(
        (run_check(s, grid_n=grid_n, tol_scale=tol_scale) for s in specs),
        key=lambda r: r.id,
    )
    passed = sum(1 for r in results if r.passed)
    return Report(
        created_at=datetime.now(timezone.utc).isoformat(),
        suite=suite,
        results=tuple(results),
        summary={"total": len(results), "passed": passed, "failed": len(results) - passed},
    )


def serialize(report: Report, fmt: str = "json") -> bytes:
    if fmt == "json":
        payload = {
            "created_at": report.created_at,
            "suite": report.suite,
            "results": [
                {
                    "id": r.id,
                    "passed": r.passed,
                    "max_residual": r.max_residual,
                    "argmax": r.argmax,
                    "points": r.points,
                    "elapsed_ms": r.elapsed_ms,
                }
                for r in report.results
            ],
            "summary": dict(report.summary),
        }
        return (json.dumps(payload, indent=2) + "\n").encode("utf-8")
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\r\n")
        writer.writerow(["id", "passed", "max_residual", "argmax", "points", "elapsed_ms"])
        for r in report.results:
            writer.writerow([
                r.id, "true" if r.passed else "false",
                repr(r.max_residual), repr(r.argmax), r.points, repr(r.elapsed_ms),
            ])
        return buf.getvalue().encode("utf-8")
    raise DomainError(f"unknown format {fmt!r}; use 'json' or 'csv'")


def parse_report(data) -> Report:
    if isinstance(data, (bytes, bytearray)):
        data = data.decode("utf-8")
    payload = json.loads(data)
    results = tuple(
        CheckResult(
            id=r["id"], passed=r["passed"], max_residual=r["max_residual"],
            argmax=r["argmax"], points=r["points"], elapsed_ms=r["elapsed_ms"],
        )
        for r in payload["results"]
    )
    return Report(
        created_at=payload["created_at"], suite=payload["suite"],
        results=results, summary=payload["summary"],
    )
