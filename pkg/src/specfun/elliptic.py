"""Complete elliptic integrals, their generalizations, and the ring modulus.

The classical integrals ride the arithmetic-geometric mean: K from the
AGM limit, E from the companion c_n^2 sum.  The generalized integrals of
signature parameter a are (pi/2) 2F1(a, 1-a; 1; r^2) and
(pi/2) 2F1(a-1, 1-a; 1; r^2), evaluated through the hypergeometric
engine with exact complements, so the ratio defining the ring modulus

    mu_a(r) = pi/(2 sin(pi a)) * F(a,1-a;1;1-r^2) / F(a,1-a;1;r^2)

stays accurate deep into both corners.  Inverting mu_a uses the symmetry
mu_a(r) mu_a(r') = (pi/(2 sin(pi a)))^2 to keep the numeric root finder on
the well-conditioned half r <= 1/sqrt(2), and switches to the logarithmic
asymptote exp(R_a/2 - y) once the target is deep enough that its error is
below roundoff.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BracketError, DomainError
from .hyper import hyp2f1, ramanujan_R
from . import kernel

__all__ = [
    "SignatureParam",
    "ModulusPoint",
    "agm",
    "ellip_k",
    "ellip_e",
    "ellip_k_prime",
    "ellip_e_prime",
    "k_a",
    "e_a",
    "k_a_prime",
    "e_a_prime",
    "mu",
    "mu_a",
    "mu_a_inverse",
    "phi_k",
    "phi_k_a",
    "legendre_residual",
    "generalized_legendre_residual",
    "ellipse_perimeter",
    "muir_approx",
    "upper_approx",
    "ode_residual",
    "schwarzian_residual",
    "ODE_IDS",
]

_MU_GUARD = 1e-7  # public mu_a refuses closer to the endpoints than this


@dataclass(frozen=True)
class SignatureParam:
    a: float

    def __post_init__(self):
        if not 0.0 < self.a < 1.0:
            raise DomainError(f"signature parameter must lie in (0, 1), got {self.a}")


@dataclass(frozen=True)
class ModulusPoint:
    r: float
    r_prime: float

    @staticmethod
    def from_r(r: float) -> "ModulusPoint":
        if not 0.0 < r < 1.0:
            raise DomainError(f"modulus must lie in (0, 1), got {r}")
        return ModulusPoint(r=r, r_prime=math.sqrt((1.0 - r) * (1.0 + r)))


def _sig(a) -> float:
    if isinstance(a, SignatureParam):
        return a.a
    a = float(a)
    if not 0.0 < a < 1.0:
        raise DomainError(f"signature parameter must lie in (0, 1), got {a}")
    return a


def _complement(r: float) -> float:
    # (1-r)(1+r) loses nothing; 1 - r*r loses half the digits near r = 1
    return (1.0 - r) * (1.0 + r)


def agm(x: float, y: float) -> float:
    """Common limit of the arithmetic-geometric mean iteration."""
    if not (x > 0.0 and y > 0.0):
        raise DomainError(f"agm needs positive arguments, got ({x}, {y})")
    a, b = float(x), float(y)
    if a < b:
        a, b = b, a
    for _ in range(100):
        if a - b <= 4.0 * math.ulp(a):
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return 0.5 * (a + b)


def ellip_k(r: float) -> float:
    """K(r) = pi / (2 agm(1, r')); diverges at r = 1."""
    if not 0.0 <= r < 1.0:
        if r == 1.0:
            raise OverflowError("K(1) = +infinity")
        raise DomainError(f"ellip_k needs r in [0, 1), got {r}")
    return math.pi / (2.0 * agm(1.0, math.sqrt(_complement(r))))


def ellip_k_prime(r: float) -> float:
    """K(r') = pi / (2 agm(1, r)); diverges at r = 0."""
    if not 0.0 < r <= 1.0:
        if r == 0.0:
            raise OverflowError("K'(0) = +infinity")
        raise DomainError(f"ellip_k_prime needs r in (0, 1], got {r}")
    return math.pi / (2.0 * agm(1.0, r))


def _ellip_e_core(m: float, m_prime: float) -> float:
    # E at modulus m, complement m': AGM with the 2^(n-1) c_n^2 correction
    if m == 0.0:
        return 0.5 * math.pi
    if m == 1.0:
        return 1.0
    a, b = 1.0, m_prime
    csum = 0.5 * m * m
    weight = 1.0
    for _ in range(100):
        if a - b <= 4.0 * math.ulp(a):
            break
        c = 0.5 * (a - b)
        csum += weight * c * c
        weight *= 2.0
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    k_val = math.pi / (a + b)
    return k_val * (1.0 - csum)


def ellip_e(r: float) -> float:
    """E(r) on [0, 1]; E(0) = pi/2, E(1) = 1."""
    if not 0.0 <= r <= 1.0:
        raise DomainError(f"ellip_e needs r in [0, 1], got {r}")
    return _ellip_e_core(r, math.sqrt(_complement(r)))


def ellip_e_prime(r: float) -> float:
    """E(r') on [0, 1]."""
    if not 0.0 <= r <= 1.0:
        raise DomainError(f"ellip_e_prime needs r in [0, 1], got {r}")
    return _ellip_e_core(math.sqrt(_complement(r)), r)


def k_a(a, r: float) -> float:
    """First-kind generalized integral (pi/2) F(a, 1-a; 1; r^2)."""
    a = _sig(a)
    if not 0.0 <= r < 1.0:
        raise DomainError(f"k_a needs r in [0, 1), got {r}")
    return 0.5 * math.pi * hyp2f1(a, 1.0 - a, 1.0, r * r, one_minus_x=_complement(r))


def k_a_prime(a, r: float) -> float:
    """k_a at the complementary modulus."""
    a = _sig(a)
    if not 0.0 < r <= 1.0:
        raise DomainError(f"k_a_prime needs r in (0, 1], got {r}")
    return 0.5 * math.pi * hyp2f1(a, 1.0 - a, 1.0, _complement(r), one_minus_x=r * r)


def e_a(a, r: float) -> float:
    """Second-kind generalized integral (pi/2) F(a-1, 1-a; 1; r^2);
    e_a(1) = sin(pi a) / (2(1-a)) in closed form."""
    a = _sig(a)
    if not 0.0 <= r <= 1.0:
        raise DomainError(f"e_a needs r in [0, 1], got {r}")
    if r == 1.0:
        return math.sin(math.pi * a) / (2.0 * (1.0 - a))
    return 0.5 * math.pi * hyp2f1(a - 1.0, 1.0 - a, 1.0, r * r, one_minus_x=_complement(r))


def e_a_prime(a, r: float) -> float:
    """e_a at the complementary modulus."""
    a = _sig(a)
    if not 0.0 <= r <= 1.0:
        raise DomainError(f"e_a_prime needs r in [0, 1], got {r}")
    if r == 0.0:
        return math.sin(math.pi * a) / (2.0 * (1.0 - a))
    return 0.5 * math.pi * hyp2f1(a - 1.0, 1.0 - a, 1.0, _complement(r), one_minus_x=r * r)


def _mu_classical(r: float) -> float:
    return 0.5 * math.pi * agm(1.0, math.sqrt(_complement(r))) / agm(1.0, r)


def _mu_general(a: float, r: float) -> float:
    x = r * r
    xc = _complement(r)
    num = hyp2f1(a, 1.0 - a, 1.0, xc, one_minus_x=x)
    den = hyp2f1(a, 1.0 - a, 1.0, x, one_minus_x=xc)
    return 0.5 * math.pi / math.sin(math.pi * a) * num / den


def _mu_full(a: float, r: float) -> float:
    # internal evaluator without the public endpoint guard
    if a == 0.5:
        return _mu_classical(r)
    return _mu_general(a, r)


def mu(r: float) -> float:
    """Plane ring modulus pi K'(r) / (2 K(r))."""
    return mu_a(0.5, r)


def mu_a(a, r: float) -> float:
    """Generalized ring modulus; decreasing homeomorphism of (0,1) onto
    (0, infinity).  Refuses r within 1e-7 of either endpoint rather than
    degrade silently."""
    a = _sig(a)
    if not _MU_GUARD <= r <= 1.0 - _MU_GUARD:
        raise DomainError(f"mu_a supports r in [{_MU_GUARD}, {1 - _MU_GUARD}], got {r}")
    return _mu_full(a, r)


_INVERT_TOL = 1e-13
_ASYM_MARGIN = 25.0  # use the log asymptote once -log(root) exceeds this
_SQRT_HALF = math.sqrt(0.5)


def mu_a_inverse(a, y: float) -> float:
    """Solve mu_a(r) = y for r in (0, 1).

    Targets below the symmetry value pi/(2 sin(pi a)) are mapped through
    mu_a(r) mu_a(r') = (pi/(2 sin(pi a)))^2 so the root finder only ever
    runs on r <= 1/sqrt(2), where one ulp of r moves mu_a by O(ulp).
    Raises BracketError when the root is closer to 1 than binary64 can
    represent.
    """
    a = _sig(a)
    if not y > 0.0:
        raise DomainError(f"mu_a_inverse needs y > 0, got {y}")
    c_sym = 0.5 * math.pi / math.sin(math.pi * a)
    if y < c_sym:
        rc = mu_a_inverse(a, c_sym * c_sym / y)
        root = math.sqrt((1.0 - rc) * (1.0 + rc))
        if root >= 1.0:
            raise BracketError(
                f"mu_a^-1({y}) is closer to 1 than binary64 resolves",
                saturating_endpoint=1.0,
            )
        return root
    r_half = 0.5 * ramanujan_R(a, 1.0 - a)
    if y >= r_half + _ASYM_MARGIN:
        # mu_a(r) = R_a/2 - log r + O(r^2 log r); the dropped term is below
        # e^(-2*margin) here, far under roundoff
        return math.exp(r_half - y)
    res = kernel.invert_monotone(
        lambda t: _mu_full(a, t), y, 1e-15, _SQRT_HALF + 0.01, tol=_INVERT_TOL
    )
    return res.root


def phi_k_a(a, big_k: float, r: float) -> float:
    """Modular function: the s with mu_a(s) = mu_a(r) / K."""
    a = _sig(a)
    if not big_k > 0.0:
        raise DomainError(f"phi_k_a needs K > 0, got {big_k}")
    if not 0.0 < r < 1.0:
        raise DomainError(f"phi_k_a needs r interior to (0, 1), got {r}")
    return mu_a_inverse(a, _mu_full(a, r) / big_k)


def phi_k(big_k: float, r: float) -> float:
    """Classical modular function (signature parameter 1/2)."""
    return phi_k_a(0.5, big_k, r)


def legendre_residual(r: float) -> float:
    """E K' + E' K - K K' - pi/2 (identically zero)."""
    if not 0.0 < r < 1.0:
        raise DomainError(f"legendre_residual needs r in (0, 1), got {r}")
    k = ellip_k(r)
    kp = ellip_k_prime(r)
    return ellip_e(r) * kp + ellip_e_prime(r) * k - k * kp - 0.5 * math.pi


def generalized_legendre_residual(a, r: float) -> float:
    """e_a k_a' + e_a' k_a - k_a k_a' - pi sin(pi a) / (4(1-a))."""
    a = _sig(a)
    if not 0.0 < r < 1.0:
        raise DomainError(f"needs r in (0, 1), got {r}")
    ka = k_a(a, r)
    kap = k_a_prime(a, r)
    rhs = math.pi * math.sin(math.pi * a) / (4.0 * (1.0 - a))
    return e_a(a, r) * kap + e_a_prime(a, r) * ka - ka * kap - rhs


def ellipse_perimeter(b: float) -> float:
    """Perimeter of the ellipse with semiaxes 1 and b: 4 E(e), e^2 = 1 - b^2."""
    if not 0.0 <= b <= 1.0:
        raise DomainError(f"semiaxis must lie in [0, 1], got {b}")
    return 4.0 * ellip_e(math.sqrt(_complement(b)))


def muir_approx(b: float) -> float:
    """Power-mean lower approximation 2 pi ((1 + b^(3/2))/2)^(2/3)."""
    if not 0.0 <= b <= 1.0:
        raise DomainError(f"semiaxis must lie in [0, 1], got {b}")
    return 2.0 * math.pi * ((1.0 + b ** 1.5) / 2.0) ** (2.0 / 3.0)


def upper_approx(b: float) -> float:
    """Quadratic-mean upper approximation 2 pi sqrt((1 + b^2)/2)."""
    if not 0.0 <= b <= 1.0:
        raise DomainError(f"semiaxis must lie in [0, 1], got {b}")
    return 2.0 * math.pi * math.sqrt((1.0 + b * b) / 2.0)


ODE_IDS = ("ka_ode", "ea_ode", "lemniscate_ode")
_GUARD = 0.05


def ode_residual(which: str, a, r: float) -> float:
    """Residual of the second-order ODE satisfied by k_a, e_a, or the
    square-root-argument solution F(a, 1-a; 1; sqrt(1-z^2)).

    Derivatives are stencil-based; callers should expect ~1e-5 noise.
    Arguments outside the guard band (0.05, 0.95) are refused.
    """
    if which not in ODE_IDS:
        raise DomainError(f"unknown ode {which!r}; use one of {ODE_IDS}")
    a = _sig(a)
    if not _GUARD < r < 1.0 - _GUARD:
        raise DomainError(f"guard band violation: r must lie in ({_GUARD}, {1 - _GUARD})")
    if which == "ka_ode":
        f = lambda t: k_a(a, t)
        d1 = kernel.derivative(f, r, order=1, domain=(0.0, 1.0))
        d2 = kernel.derivative(f, r, order=2, domain=(0.0, 1.0))
        return r * _complement(r) * d2 + (1.0 - 3.0 * r * r) * d1 - 4.0 * a * (1.0 - a) * r * f(r)
    if which == "ea_ode":
        f = lambda t: e_a(a, t)
        d1 = kernel.derivative(f, r, order=1, domain=(0.0, 1.0))
        d2 = kernel.derivative(f, r, order=2, domain=(0.0, 1.0))
        return r * _complement(r) * d2 + _complement(r) * d1 + 4.0 * (1.0 - a) ** 2 * r * f(r)

    def w(t):
        arg = math.sqrt(_complement(t))
        return hyp2f1(a, 1.0 - a, 1.0, arg, one_minus_x=t * t / (1.0 + arg))

    big_z = math.sqrt(_complement(r))
    one_minus_z = r * r / (1.0 + big_z)
    d1 = kernel.derivative(w, r, order=1, domain=(0.0, 1.0))
    d2 = kernel.derivative(w, r, order=2, domain=(0.0, 1.0))
    return (
        big_z ** 3 * one_minus_z * r * d2
        - (big_z * one_minus_z + (1.0 - 2.0 * big_z) * big_z * r * r) * d1
        - a * (1.0 - a) * r ** 3 * w(r)
    )


def schwarzian_residual(a, r: float, step: float = None) -> float:
    """Schwarzian derivative of mu_a minus its closed form

    -8a(1-a)/(r')^2 + (1 + 6r^2 - 3r^4) / (2 r^2 (r')^4).

    Third-derivative stencils are noisy; expect ~1e-3 agreement at the
    default step 1e-2 r(1-r), improving superquadratically as the step
    shrinks.
    """
    a = _sig(a)
    if not 0.1 < r < 0.9:
        raise DomainError(f"schwarzian guard band is (0.1, 0.9), got r = {r}")
    h = 1e-2 * r * (1.0 - r) if step is None else float(step)
    f = lambda t: _mu_full(a, t)
    w1 = kernel.derivative(f, r, order=1, step=h, domain=(0.0, 1.0))
    w2 = kernel.derivative(f, r, order=2, step=h, domain=(0.0, 1.0))
    w3 = kernel.derivative(f, r, order=3, step=h, domain=(0.0, 1.0))
    s_val = w3 / w1 - 1.5 * (w2 / w1) ** 2
    rp2 = _complement(r)
    rhs = -8.0 * a * (1.0 - a) / rp2 + (1.0 + 6.0 * r * r - 3.0 * r ** 4) / (2.0 * r * r * rp2 * rp2)
    return s_val - rhs
