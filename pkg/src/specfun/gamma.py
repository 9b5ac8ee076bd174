"""Gamma-family evaluators and Euler-Mascheroni accelerations.

Gamma via recurrence shift into [9, 10) plus a Stirling log-series, with
reflection on the left half-line.  On top of that sit the sixth-root
asymptotic expansion of Gamma(x+1) with its seven printed rational tail
coefficients, the theta correction term it defines, the DeTemple sequence
R_n with its n^-2 bracket, an exponentially convergent series estimate of
the Euler-Mascheroni constant, and the auxiliary monotone functions used
by the gamma inequality battery.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import DomainError, PoleError, RangeError
from .kernel import PairValue, compensated_sum

__all__ = [
    "EULER_GAMMA",
    "CONSTANTS",
    "GammaConstants",
    "GammaEstimate",
    "DeTempleValues",
    "RAMANUJAN_TAIL_COEFFS",
    "gamma",
    "log_gamma",
    "digamma",
    "trigamma",
    "beta",
    "ramanujan_gamma",
    "theta",
    "detemple",
    "detemple_range",
    "karatsuba_euler_gamma",
    "mono_f",
    "lemma_g",
    "lemma_h",
]

# 30-digit literal; binary64 keeps ~17 of them.  The bracket tests need the
# constant to far better accuracy than any R_n they compare against.
EULER_GAMMA = float("0.577215664901532860606512090082")


@dataclass(frozen=True)
class GammaConstants:
    euler_gamma: float
    pi: float
    log2: float


CONSTANTS = GammaConstants(euler_gamma=EULER_GAMMA, pi=math.pi, log2=math.log(2.0))


@dataclass(frozen=True)
class GammaEstimate:
    """A computed value plus an error bound.

    ``error_bound`` is rigorous for the exponential-series method (it is
    the proven c_k bound) and heuristic for the sixth-root expansion
    (magnitude of the first omitted term's contribution).
    """

    value: float
    error_bound: float
    method: str


# B_{2n} / (2n (2n-1)): log-gamma Stirling series coefficients
_STIRLING_C = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
)

# B_{2n} / (2n): digamma asymptotic coefficients
_DIGAMMA_C = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
)

# B_{2n}: trigamma asymptotic coefficients
_B2N = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
)

_SHIFT_LGAMMA = 9.0
_SHIFT_PSI = 10.0
_LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)
_GAMMA_OVERFLOW = 171.624


def _is_nonpositive_integer(x: float) -> bool:
    return x <= 0.0 and x == math.floor(x)


def _sinpi(x: float) -> float:
    # reduce in exact double arithmetic before multiplying by pi
    n = math.floor(x)
    r = x - n
    if r > 0.5:
        s = -math.sin(math.pi * (r - 1.0))
    else:
        s = math.sin(math.pi * r)
    return -s if int(n) % 2 else s


def _cospi(x: float) -> float:
    n = math.floor(x)
    r = x - n
    c = math.cos(math.pi * r)
    return -c if int(n) % 2 else c


def _stirling_log_gamma(y: float) -> float:
    # requires y >= 9; first omitted term below 1e-15 there
    s = (y - 0.5) * math.log(y) - y + _LOG_SQRT_2PI
    inv2 = 1.0 / (y * y)
    p = 1.0 / y
    for c in _STIRLING_C:
        s += c * p
        p *= inv2
    return s


def log_gamma(x: float) -> float:
    """log Gamma(x) for x > 0."""
    if not x > 0.0:
        raise DomainError(f"log_gamma needs x > 0, got {x}")
    if x >= _SHIFT_LGAMMA:
        return _stirling_log_gamma(x)
    shift = 0.0
    y = x
    while y < _SHIFT_LGAMMA:
        shift += math.log(y)
        y += 1.0
    return _stirling_log_gamma(y) - shift


def gamma(x: float) -> float:
    """Gamma(x) on the real line away from the poles at 0, -1, -2, ...

    Relative error within ~1e-13 across [-170, 170]; raises OverflowError
    past the binary64 ceiling near 171.62.
    """
    if math.isnan(x):
        return x
    if _is_nonpositive_integer(x):
        raise PoleError(f"gamma pole at {x}")
    if x > _GAMMA_OVERFLOW:
        raise OverflowError(f"gamma({x}) exceeds binary64 range")
    if x < 0.5:
        # reflection through log space so deep-left arguments underflow
        # gracefully instead of overflowing the intermediate Gamma(1-x)
        s = _sinpi(x)
        ln = math.log(math.pi) - math.log(abs(s)) - log_gamma(1.0 - x)
        if ln > 709.0:
            raise OverflowError(f"gamma({x}) exceeds binary64 range")
        return math.copysign(math.exp(ln), s)
    if x < _SHIFT_LGAMMA:
        prod = 1.0
        y = x
        while y < _SHIFT_LGAMMA:
            prod *= y
            y += 1.0
        return math.exp(_stirling_log_gamma(y)) / prod
    # shift down into [9, 10) and multiply the recurrence factors back
    m = int(math.floor(x - _SHIFT_LGAMMA))
    t = x - m
    prod = 1.0
    for j in range(1, m + 1):
        prod *= x - j
    return math.exp(_stirling_log_gamma(t)) * prod


def digamma(x: float) -> float:
    """Psi(x) = d/dx log Gamma(x), poles excluded."""
    if _is_nonpositive_integer(x):
        raise PoleError(f"digamma pole at {x}")
    if x < 0.5:
        return digamma(1.0 - x) - math.pi * _cospi(x) / _sinpi(x)
    shift = 0.0
    y = x
    while y < _SHIFT_PSI:
        shift += 1.0 / y
        y += 1.0
    s = math.log(y) - 0.5 / y
    inv2 = 1.0 / (y * y)
    p = inv2
    for c in _DIGAMMA_C:
        s -= c * p
        p *= inv2
    return s - shift


def trigamma(x: float) -> float:
    """Psi'(x), poles excluded."""
    if _is_nonpositive_integer(x):
        raise PoleError(f"trigamma pole at {x}")
    if x < 0.5:
        s = _sinpi(x)
        return math.pi * math.pi / (s * s) - trigamma(1.0 - x)
    shift = 0.0
    y = x
    while y < _SHIFT_PSI:
        shift += 1.0 / (y * y)
        y += 1.0
    inv = 1.0 / y
    inv2 = inv * inv
    s = inv + 0.5 * inv2
    p = inv2 * inv
    for b in _B2N:
        s += b * p
        p *= inv2
    return s + shift


def beta(a: float, b: float) -> float:
    """B(a,b) = Gamma(a)Gamma(b)/Gamma(a+b) for a, b > 0."""
    if not (a > 0.0 and b > 0.0):
        raise DomainError(f"beta needs a, b > 0, got ({a}, {b})")
    if a + b < 25.0:
        return gamma(a) * gamma(b) / gamma(a + b)
    return math.exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b))


# the seven printed tail coefficients of the sixth-root expansion, exact
RAMANUJAN_TAIL_COEFFS = (
    Fraction(1, 30),
    Fraction(-11, 240),
    Fraction(79, 3360),
    Fraction(3539, 201600),
    Fraction(-9511, 403200),
    Fraction(-10051, 716800),
    Fraction(47474887, 1277337600),
)
_RAMANUJAN_TAIL_FLOAT = tuple(float(c) for c in RAMANUJAN_TAIL_COEFFS)


def ramanujan_gamma(x: float, terms: int = 7) -> GammaEstimate:
    """Gamma(x+1) via sqrt(pi) (x/e)^x (8x^3+4x^2+x+ tail)^(1/6).

    ``terms`` selects how many of the seven rational tail coefficients
    enter (0 keeps only the cubic).  The error bound is the heuristic
    contribution of the first omitted term.
    """
    if not x >= 1.0:
        raise DomainError(f"ramanujan_gamma needs x >= 1, got {x}")
    if not 0 <= terms <= 7:
        raise RangeError(f"terms must be in 0..7, got {terms}")
    body = 8.0 * x ** 3 + 4.0 * x * x + x
    p = 1.0
    for j in range(terms):
        body += _RAMANUJAN_TAIL_FLOAT[j] * p
        p /= x
    value = math.exp(0.5 * math.log(math.pi) + x * (math.log(x) - 1.0) + math.log(body) / 6.0)
    if terms < 7:
        omitted = abs(_RAMANUJAN_TAIL_FLOAT[terms]) * p
    else:
        omitted = abs(_RAMANUJAN_TAIL_FLOAT[6]) * p  # unknown next coefficient; reuse scale
    return GammaEstimate(value=value, error_bound=value * omitted / (6.0 * body), method="ramanujan_series")


_THETA_SWITCH = 10.0


def _theta_large(x: float) -> float:
    # G(x)^6 = 8x^3 exp(6 S(x)) with S the Stirling tail, so
    # theta = 240 x^3 [exp(6S) - 1 - 1/(2x) - 1/(8x^2)]; expanding the
    # bracket term by term removes the cancellation that would otherwise
    # eat ~x^3 digits.
    if x > 1e15:
        return 1.0 - 11.0 / (8.0 * x)
    inv2 = 1.0 / (x * x)
    p = inv2 / x
    tail = 0.0
    for c in _STIRLING_C[1:]:
        tail += c * p
        p *= inv2
    tail *= 6.0
    lead = 0.5 / x
    s6 = lead + tail
    quad = 0.5 * tail * (s6 + lead)
    cubic = 0.0
    t = s6 ** 3 / 6.0
    first = abs(t)
    m = 3
    while m < 30:
        cubic += t
        m += 1
        t *= s6 / m
        if abs(t) <= 1e-22 * first:
            break
    return 240.0 * x ** 3 * (tail + quad + cubic)


def theta(x: float) -> float:
    """Sixth-root correction term: 30 (G(x)^6 - 8x^3 - 4x^2 - x).

    G(x) = (e/x)^x Gamma(1+x)/sqrt(pi).  A proper fraction for all finite
    x >= 0, equal to 30/pi^3 at 0 and increasing to 1 as x -> infinity.
    """
    if not x >= 0.0:
        raise DomainError(f"theta needs x >= 0, got {x}")
    if x == 0.0:
        return 30.0 / math.pi ** 3
    if x >= _THETA_SWITCH:
        return _theta_large(x)
    log_g = x - x * math.log(x) + log_gamma(1.0 + x) - 0.5 * math.log(math.pi)
    return 30.0 * (math.exp(6.0 * log_g) - 8.0 * x ** 3 - 4.0 * x * x - x)


@dataclass(frozen=True)
class DeTempleValues:
    """D_n, R_n and the scaled gap big_h = n^2 (R_n - gamma).

    ``r_minus_gamma`` carries the gap to full relative precision; forming
    it from ``r_n`` would throw most of that away.
    """

    n: int
    d_n: float
    r_n: float
    big_h: float
    r_minus_gamma: float


# (1 - 2^(1-2j)) B_{2j} / (2j): asymptotic series for psi(n+1) - log(n+1/2)
_DETEMPLE_Q = (
    1.0 / 24.0,
    -7.0 / 960.0,
    31.0 / 8064.0,
    -127.0 / 30720.0,
    511.0 / 67584.0,
    -1414477.0 / 67092480.0,
    8191.0 / 98304.0,
    -118518239.0 / 267386880.0,
)

_DETEMPLE_SERIES_MIN = 32


def _detemple_gap_series(n: int) -> float:
    # R_n - gamma = psi(n+1) - log(n+1/2), expanded at z = n + 1/2;
    # no cancellation, full relative precision for n >= ~20
    z = n + 0.5
    inv2 = 1.0 / (z * z)
    p = inv2
    s = 0.0
    for q in _DETEMPLE_Q:
        s += q * p
        p *= inv2
    return s


def _detemple_from_harmonic(n: int, harmonic: float) -> DeTempleValues:
    d_n = harmonic - math.log(n)
    r_n = harmonic - math.log(n + 0.5)
    if n >= _DETEMPLE_SERIES_MIN:
        gap = _detemple_gap_series(n)
    else:
        gap = r_n - EULER_GAMMA
    return DeTempleValues(n=n, d_n=d_n, r_n=r_n, big_h=n * n * gap, r_minus_gamma=gap)


def detemple(n: int) -> DeTempleValues:
    """DeTemple record at n: D_n, R_n, and H(n) = n^2 (R_n - gamma)."""
    if n < 1 or n != int(n):
        raise DomainError(f"detemple needs integer n >= 1, got {n}")
    n = int(n)
    harmonic = compensated_sum(1.0 / k for k in range(1, n + 1))
    return _detemple_from_harmonic(n, harmonic)


def detemple_range(n_max: int) -> Iterator[DeTempleValues]:
    """Yield DeTemple records for n = 1..n_max with an O(n_max) running sum."""
    if n_max < 1:
        raise DomainError(f"detemple_range needs n_max >= 1, got {n_max}")
    s = 0.0
    comp = 0.0
    for n in range(1, int(n_max) + 1):
        y = 1.0 / n
        t = s + y
        if abs(s) >= abs(y):
            comp += (s - t) + y
        else:
            comp += (y - t) + s
        s = t
        yield _detemple_from_harmonic(n, s + comp)


def karatsuba_euler_gamma(k: int) -> GammaEstimate:
    """Series estimate of the Euler-Mascheroni constant with proven bound c_k.

    value = 1 - log(k) sum_r d(k,r) + sum_r d(k,r)/(r+1) over r = 1..12k+1,
    d(k,r) = (-1)^(r-1) k^(r+1) / ((r-1)! (r+1)), and
    |value - gamma| <= c_k = 2/(12k)! + 2 k^2 e^(-k).

    The terms reach ~e^k before cancelling back to O(1), so they are
    generated by the ratio recurrence d(k,r+1) = d(k,r) (-k)(r+1)/(r(r+2))
    and accumulated in PairValue arithmetic; direct powers and factorials
    would overflow binary64 from k = 15 on.  Past k ~ 40 even the ~32
    digits of a PairValue are consumed by the cancellation and the c_k
    certificate stops being numerically meaningful.
    """
    if k != int(k) or not 1 <= k <= 200:
        raise RangeError(f"k must be an integer in [1, 200], got {k}")
    k = int(k)
    d = PairValue.from_float(k * k / 2.0)  # d(k,1)
    s1 = PairValue(0.0)
    s2 = PairValue(0.0)
    for r in range(1, 12 * k + 2):
        s1 = s1.add(d)
        s2 = s2.add(d.div_float(float(r + 1)))
        d = d.mul_float(float(-k * (r + 1))).div_float(float(r * (r + 2)))
    value = PairValue.from_float(1.0).sub(s1.mul_float(math.log(k))).add(s2)
    c_k = 2.0 * k * k * math.exp(-k)
    c_k += float(Fraction(2, math.factorial(12 * k)))
    return GammaEstimate(value=value.to_float(), error_bound=c_k, method="karatsuba_series")


_MONO_F_LIMIT = 1.0 - EULER_GAMMA
_MONO_F_SLOPE = (math.pi ** 2 / 6.0 - 2.0 + EULER_GAMMA) / 2.0


def mono_f(x: float) -> float:
    """log Gamma(x+1) / (x log x), continued through the x = 1 hole.

    Strictly increasing on (0, infinity) onto (0, 1); the value at the
    removable singularity is 1 - gamma.
    """
    if not x > 0.0:
        raise DomainError(f"mono_f needs x > 0, got {x}")
    t = x - 1.0
    if abs(t) <= 1e-5:
        return _MONO_F_LIMIT + _MONO_F_SLOPE * t
    return log_gamma(x + 1.0) / (x * math.log(x))


def lemma_g(x: float) -> float:
    """sum_{n>=1} (n-x)/(n+x)^3, positive for all x > -1.

    Summed to N = max(1000, 50(1+x)) terms; the remainder is replaced by
    its midpoint integral plus the f'/24 Euler-Maclaurin correction,
    leaving the declared truncation error below 1e-12.
    """
    if not x > -1.0:
        raise DomainError(f"lemma_g needs x > -1, got {x}")
    n_terms = max(1000, int(math.ceil(50.0 * (1.0 + x))))
    s = compensated_sum((n - x) / (n + x) ** 3 for n in range(1, n_terms + 1))
    u = n_terms + 0.5
    a = u + x
    tail = 1.0 / a - x / (a * a) + (4.0 * x - 2.0 * u) / (24.0 * a ** 4)
    return s + tail


def lemma_h(x: float) -> float:
    """x^2 Psi'(1+x) - x Psi(1+x) + log Gamma(1+x); zero at x = 0,
    nonnegative on (-1, infinity)."""
    if not x > -1.0:
        raise DomainError(f"lemma_h needs x > -1, got {x}")
    if x == 0.0:
        return 0.0
    return x * x * trigamma(1.0 + x) - x * digamma(1.0 + x) + log_gamma(1.0 + x)
