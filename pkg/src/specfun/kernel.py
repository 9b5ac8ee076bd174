"""Shared numeric substrate.

Error-free transformations and a two-term (double-double) value type,
exact compensated summation, central-difference stencils, a bracketed
monotone root finder, and grid generation.  Everything here is a pure
function of its inputs and safe to call from any number of threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from .errors import BracketError, DomainError, IterationCapError

__all__ = [
    "PairValue",
    "BracketRoot",
    "Grid",
    "compensated_sum",
    "derivative",
    "invert_monotone",
]

_SPLITTER = 134217729.0  # 2^27 + 1, Dekker split constant


def _two_sum(a: float, b: float):
    """s + e == a + b exactly, s = fl(a + b)."""
    s = a + b
    bb = s - a
    e = (a - (s - bb)) + (b - bb)
    return s, e


def _quick_two_sum(a: float, b: float):
    """Assumes |a| >= |b|."""
    s = a + b
    return s, b - (s - a)


def _two_prod(a: float, b: float):
    """p + e == a * b exactly, via Dekker splitting."""
    p = a * b
    c = _SPLITTER * a
    ahi = c - (c - a)
    alo = a - ahi
    c = _SPLITTER * b
    bhi = c - (c - b)
    blo = b - bhi
    e = ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo
    return p, e


@dataclass(frozen=True)
class PairValue:
    """Unevaluated two-term sum hi + lo with |lo| <= ulp(hi)/2.

    Gives roughly 32 significant decimal digits.  Used where a single
    binary64 accumulation would lose the result to cancellation (the
    exponentially convergent Euler-Mascheroni series, in particular).
    """

    hi: float
    lo: float = 0.0

    @staticmethod
    def from_float(x: float) -> "PairValue":
        return PairValue(float(x), 0.0)

    def to_float(self) -> float:
        return self.hi + self.lo

    def add(self, other: "PairValue") -> "PairValue":
        s, e = _two_sum(self.hi, other.hi)
        t, f = _two_sum(self.lo, other.lo)
        e += t
        s, e = _quick_two_sum(s, e)
        e += f
        hi, lo = _quick_two_sum(s, e)
        return PairValue(hi, lo)

    def sub(self, other: "PairValue") -> "PairValue":
        return self.add(PairValue(-other.hi, -other.lo))

    def neg(self) -> "PairValue":
        return PairValue(-self.hi, -self.lo)

    def mul(self, other: "PairValue") -> "PairValue":
        p, e = _two_prod(self.hi, other.hi)
        e += self.hi * other.lo + self.lo * other.hi
        hi, lo = _quick_two_sum(p, e)
        return PairValue(hi, lo)

    def mul_float(self, k: float) -> "PairValue":
        p, e = _two_prod(self.hi, k)
        e += self.lo * k
        hi, lo = _quick_two_sum(p, e)
        return PairValue(hi, lo)

    def div_float(self, k: float) -> "PairValue":
        q1 = self.hi / k
        p, e = _two_prod(q1, k)
        # remainder (self - q1*k) evaluated exactly
        r_hi, r_e = _two_sum(self.hi, -p)
        r = r_hi + (r_e + self.lo - e)
        q2 = r / k
        hi, lo = _quick_two_sum(q1, q2)
        return PairValue(hi, lo)


def compensated_sum(terms: Iterable[float]) -> float:
    """Sum of ``terms`` correctly rounded from the exact value.

    Backed by math.fsum (Shewchuk's exact summation), so the result is the
    nearest binary64 to the true sum regardless of cancellation, and is
    invariant under permutation of the input.  Non-finite inputs fall back
    to plain summation so that infinities and NaNs propagate instead of
    raising.
    """
    xs = [float(t) for t in terms]
    try:
        return math.fsum(xs)
    except (ValueError, OverflowError):
        total = 0.0
        for v in xs:
            total += v
        return total


# central stencils: orders 1 and 2 use 5 points, order 3 uses 7 points;
# all have O(step^4) truncation (the contract only promises O(step^2))
_DEFAULT_EPS = 2.220446049250313e-16


def _default_step(x: float, order: int) -> float:
    if order == 1:
        return _DEFAULT_EPS ** (1.0 / 3.0) * max(1.0, abs(x))
    if order == 2:
        return _DEFAULT_EPS ** 0.25
    return 1e-2 * max(1.0, abs(x))


def derivative(
    f: Callable[[float], float],
    x: float,
    order: int = 1,
    step: Optional[float] = None,
    domain: Optional[tuple] = None,
) -> float:
    """Central-difference derivative of ``f`` at ``x`` of the given order.

    ``domain``, when given as (lo, hi), declares where ``f`` may be
    evaluated; a stencil point outside it raises DomainError.
    """
    if order not in (1, 2, 3):
        raise DomainError(f"derivative order must be 1, 2 or 3, got {order}")
    h = _default_step(x, order) if step is None else float(step)
    if h <= 0.0:
        raise DomainError("step must be positive")
    reach = 3 if order == 3 else 2
    if domain is not None:
        lo, hi = domain
        if x - reach * h < lo or x + reach * h > hi:
            raise DomainError(
                f"stencil [{x - reach * h}, {x + reach * h}] leaves domain [{lo}, {hi}]"
            )
    if order == 1:
        return (f(x - 2 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2 * h)) / (12.0 * h)
    if order == 2:
        return (
            -f(x - 2 * h) + 16.0 * f(x - h) - 30.0 * f(x) + 16.0 * f(x + h) - f(x + 2 * h)
        ) / (12.0 * h * h)
    return (
        f(x - 3 * h) - 8.0 * f(x - 2 * h) + 13.0 * f(x - h)
        - 13.0 * f(x + h) + 8.0 * f(x + 2 * h) - f(x + 3 * h)
    ) / (8.0 * h ** 3)


@dataclass(frozen=True)
class BracketRoot:
    """Result of a bracketed inversion: |f(root) - target| <= tol."""

    root: float
    residual: float
    iterations: int


def invert_monotone(
    f: Callable[[float], float],
    target: float,
    bracket_lo: float,
    bracket_hi: float,
    tol: float = 1e-14,
    max_iter: int = 200,
) -> BracketRoot:
    """Solve f(x) = target for strictly monotone f on [bracket_lo, bracket_hi].

    Secant steps are accepted only while they stay inside the current
    bracket; otherwise the step bisects, so convergence is guaranteed.
    Tolerance is measured in function space.
    """
    a, b = float(bracket_lo), float(bracket_hi)
    if not a < b:
        raise BracketError(f"empty bracket [{a}, {b}]")
    fa, fb = f(a) - target, f(b) - target
    if fa == 0.0:
        return BracketRoot(a, 0.0, 0)
    if fb == 0.0:
        return BracketRoot(b, 0.0, 0)
    if fa * fb > 0.0:
        endpoint = a if abs(fa) < abs(fb) else b
        raise BracketError(
            f"target {target} not enclosed: f({a})-t={fa}, f({b})-t={fb}",
            saturating_endpoint=endpoint,
        )
    if abs(fa) <= tol:
        return BracketRoot(a, fa, 0)
    if abs(fb) <= tol:
        return BracketRoot(b, fb, 0)

    x_prev, f_prev = a, fa
    x_cur, f_cur = b, fb
    for it in range(1, max_iter + 1):
        width = b - a
        x_new = None
        if f_cur != f_prev:
            cand = x_cur - f_cur * (x_cur - x_prev) / (f_cur - f_prev)
            # require the secant step to land strictly inside the bracket
            if a + 0.0 < cand < b and abs(cand - x_cur) <= 0.75 * width:
                x_new = cand
        if x_new is None:
            x_new = 0.5 * (a + b)
        fx = f(x_new) - target
        if abs(fx) <= tol:
            return BracketRoot(x_new, fx, it)
        if fa * fx < 0.0:
            b, fb = x_new, fx
        else:
            a, fa = x_new, fx
        x_prev, f_prev = x_cur, f_cur
        x_cur, f_cur = x_new, fx
        if b - a >= width:  # no progress; force a bisection next round
            x_prev, f_prev = a, fa
            x_cur, f_cur = b, fb
    raise IterationCapError(
        f"no convergence to tol={tol} after {max_iter} iterations; last residual {f_cur}"
    )


_SPACINGS = ("linear", "logarithmic", "atanh")


@dataclass(frozen=True)
class Grid:
    """Evaluation grid on [lo, hi] with n strictly increasing points.

    Spacings: ``linear``, ``logarithmic`` (lo > 0), and ``atanh``
    (lo, hi inside (0,1); points cluster at both endpoints, which is where
    the sharp inequalities live).
    """

    lo: float
    hi: float
    n: int
    spacing: str = "linear"

    def __post_init__(self):
        if not self.lo < self.hi:
            raise DomainError(f"grid needs lo < hi, got [{self.lo}, {self.hi}]")
        if self.n < 2:
            raise DomainError("grid needs n >= 2")
        if self.spacing not in _SPACINGS:
            raise DomainError(f"unknown spacing {self.spacing!r}; use one of {_SPACINGS}")
        if self.spacing == "logarithmic" and self.lo <= 0.0:
            raise DomainError("logarithmic spacing needs lo > 0")
        if self.spacing == "atanh" and not (0.0 < self.lo < self.hi < 1.0):
            raise DomainError("atanh spacing needs 0 < lo < hi < 1")

    def with_n(self, n: int) -> "Grid":
        return Grid(self.lo, self.hi, n, self.spacing)

    def points(self) -> list:
        n = self.n
        if self.spacing == "linear":
            step = (self.hi - self.lo) / (n - 1)
            pts = [self.lo + i * step for i in range(n)]
        elif self.spacing == "logarithmic":
            la, lb = math.log(self.lo), math.log(self.hi)
            step = (lb - la) / (n - 1)
            pts = [math.exp(la + i * step) for i in range(n)]
        else:
            ua = math.atanh(2.0 * self.lo - 1.0)
            ub = math.atanh(2.0 * self.hi - 1.0)
            step = (ub - ua) / (n - 1)
            pts = [0.5 * (1.0 + math.tanh(ua + i * step)) for i in range(n)]
        pts[0], pts[-1] = self.lo, self.hi
        return pts
