"""Unit-ball volumes and sphere areas in n dimensions.

Omega_n = pi^(n/2) / Gamma(n/2 + 1) and omega_(n-1) = n Omega_n.  All
ratio-style quantities used by the sharp-constant inequalities are formed
from log-volumes so that dimensions up to 10^4 stay overflow-free.
Omega_0 = 1 by the same formula; the ratio inequalities need it at n = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import RangeError
from .gamma import log_gamma

__all__ = [
    "BallGeometry",
    "ball_volume",
    "log_ball_volume",
    "sphere_area",
    "ball_geometry",
]

_N_MAX = 10_000


def _check_range(n: int, lo: int = 0) -> int:
    if n != int(n) or not lo <= n <= _N_MAX:
        raise RangeError(f"dimension must be an integer in [{lo}, {_N_MAX}], got {n}")
    return int(n)


def log_ball_volume(n: int) -> float:
    """log Omega_n, defined for n >= 0 (log Omega_0 = 0)."""
    n = _check_range(n)
    if n == 0:
        return 0.0
    return 0.5 * n * math.log(math.pi) - log_gamma(0.5 * n + 1.0)


def ball_volume(n: int) -> float:
    """Volume Omega_n of the unit ball in R^n."""
    return math.exp(log_ball_volume(n))


def sphere_area(n_minus_1: int) -> float:
    """Surface area omega_(n-1) of the unit sphere S^(n-1) = n Omega_n."""
    m = _check_range(n_minus_1)
    n = m + 1
    return n * ball_volume(n)


@dataclass(frozen=True)
class BallGeometry:
    n: int
    volume: float
    surface: float


def ball_geometry(n: int) -> BallGeometry:
    n = _check_range(n, lo=1)
    v = ball_volume(n)
    return BallGeometry(n=n, volume=v, surface=n * v)
