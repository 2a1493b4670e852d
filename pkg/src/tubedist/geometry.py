"""Cylindrical geometry around the core geodesic.

Points of the branched cover of hyperbolic space around a geodesic are
written ``(r, zeta, theta)``: distance from the core, position along it, and
an unbounded rotation angle. The metric is

    ds^2 = dr^2 + cosh^2(r) dzeta^2 + sinh^2(r) dtheta^2.

Everything here lives on a single equidistant cylinder (fixed ``r``); no
formula for points at different radii is provided.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .trig import NEG_INF, arccosh_from_increment, cosh_difference, sym_mod

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class CylindricalPoint:
    r: float
    zeta: float = 0.0
    theta: float = 0.0

    def __post_init__(self):
        if not self.r >= 0:
            raise ValueError(f"radius must be >= 0, got {self.r!r}")


@dataclass(frozen=True)
class ComplexLength:
    """Translation ``lam`` along the core and rotation ``tau`` about it."""

    lam: float
    tau: float

    def __post_init__(self):
        if not self.lam >= 0:
            raise ValueError(f"translation length must be >= 0, got {self.lam!r}")

    @property
    def is_identity(self) -> bool:
        return self.lam == 0 and self.tau == 0

    def power(self, n: int) -> "ComplexLength":
        return ComplexLength(n * self.lam, n * self.tau)


def displacement_increment(r, dzeta, dtheta):
    """cosh d - 1 for two points on the cylinder of radius ``r``.

    Vectorized over numpy arrays. Angular differences beyond pi are clamped
    to pi: the shortest path then runs through the core.
    """
    r = np.asarray(r, dtype=float)
    dtheta = np.minimum(np.abs(dtheta), math.pi)
    ch = np.cosh(r)
    sh = np.sinh(r)
    return (2.0 * np.sinh(0.5 * np.asarray(dzeta, dtype=float)) ** 2 * ch * ch
            + 2.0 * np.sin(0.5 * dtheta) ** 2 * sh * sh)


def displacement(r, dzeta, dtheta):
    """Distance between ``(r, z, t)`` and ``(r, z + dzeta, t + dtheta)``.

    Vectorized; see :func:`displacement_increment` for the angle branch.
    """
    u = displacement_increment(r, dzeta, dtheta)
    return 2.0 * np.arcsinh(np.sqrt(0.5 * u))


def cyl_distance(p: CylindricalPoint, q: CylindricalPoint,
                 reduce_angle: bool = False) -> float:
    """Hyperbolic distance between two points on one equidistant cylinder.

    With ``reduce_angle=False`` the angular difference is taken as is (the
    branched cover, where angles are unbounded). With ``reduce_angle=True``
    it is first reduced modulo 2 pi, which is the right thing for points of
    ordinary hyperbolic space.
    """
    if p.r != q.r:
        raise ValueError(f"points must share a radius, got {p.r!r} and {q.r!r}")
    dtheta = q.theta - p.theta
    if reduce_angle:
        dtheta = sym_mod(dtheta, TWO_PI)
    u = float(displacement_increment(p.r, q.zeta - p.zeta, dtheta))
    return arccosh_from_increment(u)


def translation_sinh2(lam, theta, eps):
    """sinh^2 of the radius at which ``(lam, theta)`` moves points by ``eps``.

    Vectorized. Negative exactly when ``eps < lam``, where no such radius
    exists. Requires ``|theta| <= pi`` and ``(lam, theta) != (0, 0)``.
    """
    lam = np.asarray(lam, dtype=float)
    num = 2.0 * np.sinh(0.5 * (eps + lam)) * np.sinh(0.5 * (eps - lam))
    den = 2.0 * np.sinh(0.5 * lam) ** 2 + 2.0 * np.sin(0.5 * np.asarray(theta, dtype=float)) ** 2
    return num / den


def translation_radii(lam, theta, eps):
    """Vectorized :func:`trad`; empty entries are ``-inf``."""
    s2 = translation_sinh2(lam, theta, eps)
    out = np.full(np.shape(s2), NEG_INF)
    ok = s2 >= 0
    out[ok] = np.arcsinh(np.sqrt(s2[ok]))
    return out


def trad(lam: float, theta: float, eps: float) -> float:
    """Translation radius of the isometry with complex length lam + i theta.

    The radius at which points are moved exactly ``eps``, i.e.

        arccosh sqrt((cosh eps - cos theta) / (cosh lam - cos theta)),

    evaluated in the equivalent form
    sinh^2 r = (cosh eps - cosh lam) / (cosh lam - cos theta). Returns
    NEG_INF when ``eps < lam``. ``theta`` must already be reduced to
    ``[-pi, pi]``.
    """
    if not abs(theta) <= math.pi:
        raise ValueError(f"angle must satisfy |theta| <= pi, got {theta!r}")
    if lam < 0 or eps < 0:
        raise ValueError("lengths must be nonnegative")
    if lam == 0 and theta == 0:
        raise ValueError("the identity has no translation radius")
    num = cosh_difference(eps, lam)
    if num < 0:
        return NEG_INF
    den = 2.0 * math.sinh(0.5 * lam) ** 2 + 2.0 * math.sin(0.5 * theta) ** 2
    return math.asinh(math.sqrt(num / den))


def euclidean_distance(r: float, dzeta: float, dtheta: float) -> float:
    """Flat distance on the cylinder of radius ``r`` (angle not reduced)."""
    if not r > 0:
        raise ValueError(f"radius must be positive, got {r!r}")
    return math.hypot(dzeta * math.cosh(r), dtheta * math.sinh(r))


def project_geodesic_length(dzeta: float, dtheta: float, r: float, R: float) -> float:
    """Length at radius ``R`` of the radial projection of a flat geodesic on T_r.

    The projection keeps the coordinate displacements, so this is the flat
    distance at radius ``R``; its ratio to the length at ``r`` lies between
    cosh R / cosh r and sinh R / sinh r.
    """
    if not 0 < r < R:
        raise ValueError(f"need 0 < r < R, got r={r!r}, R={R!r}")
    return euclidean_distance(R, dzeta, dtheta)


def torus_area(alpha: float, lam: float, r: float) -> float:
    """Area of the equidistant torus of radius ``r`` in N(alpha, lam, .)."""
    if not (alpha > 0 and lam > 0 and r >= 0):
        raise ValueError("need alpha > 0, lam > 0, r >= 0")
    return 0.5 * alpha * lam * math.sinh(2.0 * r)


def sym_mod_array(a, b: float):
    """Vectorized :func:`~tubedist.trig.sym_mod`."""
    a = np.asarray(a, dtype=float)
    half = 0.5 * b
    x = a - b * np.floor((a + half) / b)
    x = np.where(x >= half, x - b, x)
    x = np.where(x < -half, x + b, x)
    return np.where((a >= -half) & (a < half), a, x)
