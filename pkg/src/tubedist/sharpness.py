"""Solid tori showing that the lower bound is sharp up to additive error.

For n >= 4 the torus N_n has core complex length 1/n^2 + 2 pi i/n. Its n-th
power translates by 1/n with no rotation, and for 1.016/n <= eps <= 0.3 that
power realizes the tube radius, which is then

    cosh r(eps) = sqrt((cosh eps - 1)/(cosh(1/n) - 1)),

only about eps * n. Choosing n from delta gives a torus whose tube distance
stays within 2.2 of the general lower bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bounds import DEPTH_CONST, EPS_MAX, BoundViolationError, lower_bound
from .geometry import TWO_PI
from .tube import ModelSolidTorus, Realizer, tube_distance, tube_radius

BIRINGER_EPS_FACTOR = 1.016
BIRINGER_INTERVAL = 1.004
SHARPNESS_FACTOR = 1.116
SHARPNESS_GAP = 2.2
RADIUS_TOL = 1e-9


def biringer_torus(n: int) -> ModelSolidTorus:
    if n < 4:
        raise ValueError(f"need n >= 4, got {n!r}")
    return ModelSolidTorus(TWO_PI, 1.0 / n**2, TWO_PI / n)


def biringer_cosh_radius(n: int, eps: float) -> float:
    """Closed-form cosh r(eps) in N_n.

    sqrt((cosh eps - 1)/(cosh(1/n) - 1)), written as a ratio of sinh values.
    """
    return math.sinh(0.5 * eps) / math.sinh(0.5 / n)


def biringer_radius_check(n: int, eps: float) -> bool:
    """Whether N_n behaves as claimed at ``eps``.

    Checks that power n realizes the radius, that cosh r matches the closed
    form to 1e-9, and that cosh r lies in (eps n, 1.004 eps n).
    """
    if not BIRINGER_EPS_FACTOR / n <= eps <= EPS_MAX:
        raise ValueError(f"eps={eps!r} outside [{BIRINGER_EPS_FACTOR}/n, {EPS_MAX}] for n={n}")
    res = tube_radius(biringer_torus(n), eps)
    if res.realizer != Realizer(n):
        return False
    c = math.cosh(res.radius)
    closed = biringer_cosh_radius(n, eps)
    return abs(c - closed) <= RADIUS_TOL and eps * n < c < BIRINGER_INTERVAL * eps * n


def sharpness_power(delta: float) -> int:
    """The unique n with 1/n <= sqrt(delta) < 1/(n - 1)."""
    root = math.sqrt(delta)
    n = max(1, math.ceil(1.0 / root))
    # Guard against the reciprocal rounding across an exact boundary.
    while 1.0 / n > root:
        n += 1
    while n > 1 and 1.0 / (n - 1) <= root:
        n -= 1
    return n


@dataclass(frozen=True)
class SharpnessWitness:
    n: int
    torus: ModelSolidTorus
    delta: float
    eps: float
    actual_distance: float
    sharpness_upper: float
    gap_to_lower: float


def sharpness_example(delta: float, eps: float) -> SharpnessWitness:
    """Torus N_n whose delta-to-eps distance nearly meets the lower bound.

    Raises :class:`BoundViolationError` if the distance exceeds
    arccosh(1.116 eps / sqrt(delta)) or that value exceeds the lower bound
    by 2.2 or more.
    """
    if not (delta > 0 and math.sqrt(DEPTH_CONST * delta) <= eps <= EPS_MAX):
        raise ValueError(f"need 0 < sqrt(7.256 delta) <= eps <= 0.3, got delta={delta!r}, eps={eps!r}")
    n = sharpness_power(delta)
    torus = biringer_torus(n)
    actual = tube_distance(torus, delta, eps)
    upper = math.acosh(SHARPNESS_FACTOR * eps / math.sqrt(delta))
    gap = upper - lower_bound(delta, eps)
    if actual > upper:
        raise BoundViolationError(f"distance {actual} exceeds {upper} at delta={delta}, eps={eps}")
    if not gap < SHARPNESS_GAP:
        raise BoundViolationError(f"gap {gap} is not below {SHARPNESS_GAP} at delta={delta}, eps={eps}")
    return SharpnessWitness(n, torus, delta, eps, actual, upper, gap)
