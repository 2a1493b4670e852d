"""Tube radii in model solid tori.

A model solid torus ``N(alpha, lam, tau)`` is the quotient of the branched
cover of hyperbolic space by an elliptic rotation of angle ``alpha`` and a
loxodromic of complex length ``lam + i tau``. With ``alpha = 2 pi`` it is an
ordinary (nonsingular) hyperbolic solid torus.

The radius r(eps) of the eps-thin tube is the largest translation radius
over the elliptic generator (singular case) and the powers of the
loxodromic generator, with each power's rotation reduced modulo ``alpha``.
:func:`tube_radius_oracle` recovers the same radius by bisecting the
injectivity radius profile instead, and serves as an independent check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.optimize import bisect

from .geometry import TWO_PI, displacement, sym_mod_array, translation_radii
from .trig import NEG_INF, cosh_difference, cosh_minus_one, sym_mod

# Radii closer than this count as tied; ties go to the smallest power.
TIE_TOL = 1e-12
ORACLE_XTOL = 1e-10
ORACLE_MAX_RADIUS = 64.0
_FIRST_CHUNK = 128


class EmptyThinPartError(ValueError):
    """The requested thin part of a nonsingular torus is empty (eps < lam)."""


@dataclass(frozen=True)
class ModelSolidTorus:
    """``N(alpha, lam, tau)``; ``tau`` is stored reduced modulo ``alpha``."""

    alpha: float
    lam: float
    tau: float

    def __post_init__(self):
        if not 0 < self.alpha <= TWO_PI:
            raise ValueError(f"cone angle must lie in (0, 2pi], got {self.alpha!r}")
        if not self.lam > 0:
            raise ValueError(f"core length must be positive, got {self.lam!r}")
        if not math.isfinite(self.tau):
            raise ValueError(f"rotation must be finite, got {self.tau!r}")
        object.__setattr__(self, "tau", sym_mod(self.tau, self.alpha))

    @property
    def nonsingular(self) -> bool:
        return self.alpha == TWO_PI


@dataclass(frozen=True)
class Realizer:
    """Group element realizing the injectivity radius on a tube boundary.

    ``power = n >= 1`` is the n-th power of the loxodromic generator;
    ``power = 0`` is the elliptic generator.
    """

    power: int

    @property
    def elliptic(self) -> bool:
        return self.power == 0

    @property
    def code(self) -> int:
        """Integer code used in sweep output: -1 elliptic, n for a power."""
        return -1 if self.elliptic else self.power

    def __str__(self):
        return "elliptic" if self.elliptic else f"power {self.power}"


ELLIPTIC = Realizer(0)


@dataclass(frozen=True)
class TubeRadiusResult:
    radius: float
    realizer: Optional[Realizer]

    @property
    def empty(self) -> bool:
        return self.radius == NEG_INF

    @property
    def code(self) -> int:
        """0 for an empty thin part, otherwise :attr:`Realizer.code`."""
        return 0 if self.realizer is None else self.realizer.code


def elliptic_radius(alpha: float, eps: float) -> float:
    """Translation radius of the elliptic generator of angle ``alpha``."""
    if alpha >= math.pi:
        return 0.5 * eps
    return math.asinh(math.sinh(0.5 * eps) / math.sin(0.5 * alpha))


def _loxodromic_max(alpha, lam, taus, eps, floor):
    """Best loxodromic translation radius per rotation in ``taus``.

    Powers are scanned in growing chunks. Past power n every translation
    radius is at most trad(n lam, 0, eps), so the scan stops once that falls
    to the current best (or ``floor``, the elliptic radius) for every row.

    Returns ``(radius, power)`` arrays, ``power = 0`` where all are empty.
    """
    taus = np.atleast_1d(np.asarray(taus, dtype=float))
    floor = np.broadcast_to(np.asarray(floor, dtype=float), taus.shape)
    n_max = int(math.floor(eps / lam)) + 1
    best = np.full(taus.shape, NEG_INF)
    chunks = []
    start, size = 1, _FIRST_CHUNK
    while start <= n_max:
        stop = min(n_max, start + size - 1)
        ns = np.arange(start, stop + 1, dtype=float)
        theta = sym_mod_array(np.outer(taus, ns), alpha)
        radii = translation_radii(ns * lam, theta, eps)
        chunks.append(radii)
        best = np.maximum(best, radii.max(axis=1))
        start, size = stop + 1, 2 * size
        if start > n_max:
            break
        tail = start * lam
        num = cosh_difference(eps, tail)
        if num < 0:
            break
        tail_bound = math.asinh(math.sqrt(num / cosh_minus_one(tail)))
        if tail_bound <= np.maximum(best, floor).min():
            break
    table = np.concatenate(chunks, axis=1)
    top = table.max(axis=1)
    first = np.argmax(table >= (top - TIE_TOL)[:, None], axis=1)
    powers = np.where(top == NEG_INF, 0, first + 1)
    return top, powers


def tube_radius_many(alpha: float, lam: float, taus, eps: float):
    """Tube radii for one ``(alpha, lam)`` and many rotations.

    Returns ``(radii, codes)`` with the sweep coding of
    :attr:`TubeRadiusResult.code`.
    """
    if not eps > 0:
        raise ValueError(f"eps must be positive, got {eps!r}")
    if not (0 < alpha <= TWO_PI and lam > 0):
        raise ValueError("need 0 < alpha <= 2pi and lam > 0")
    ell = NEG_INF if alpha == TWO_PI else elliptic_radius(alpha, eps)
    top, powers = _loxodromic_max(alpha, lam, taus, eps, ell)
    ell_wins = ell > top + TIE_TOL
    radii = np.maximum(top, ell)
    codes = np.where(ell_wins, -1, powers)
    return radii, codes


def tube_radius(N: ModelSolidTorus, eps: float) -> TubeRadiusResult:
    """Radius of the eps-thin tube of ``N`` and the element realizing it.

    The radius is NEG_INF when the thin part is empty (nonsingular ``N``
    with ``eps < lam``).
    """
    radii, codes = tube_radius_many(N.alpha, N.lam, [N.tau], eps)
    radius, code = float(radii[0]), int(codes[0])
    if code == 0:
        return TubeRadiusResult(NEG_INF, None)
    return TubeRadiusResult(radius, ELLIPTIC if code == -1 else Realizer(code))


def power_for(N: ModelSolidTorus, eps: float) -> Realizer:
    """The realizing element for ``eps``; the smallest power on ties."""
    res = tube_radius(N, eps)
    if res.empty:
        raise EmptyThinPartError(f"{N} has empty {eps}-thin part")
    return res.realizer


def tube_distance(N: ModelSolidTorus, delta: float, eps: float) -> float:
    """Distance r(eps) - r(delta) between the delta- and eps-tube boundaries."""
    if not 0 < delta <= eps:
        raise ValueError(f"need 0 < delta <= eps, got delta={delta!r}, eps={eps!r}")
    r_delta = tube_radius(N, delta).radius
    if r_delta == NEG_INF:
        raise EmptyThinPartError(f"{N} has empty {delta}-thin part")
    return tube_radius(N, eps).radius - r_delta


def cusp_distance(delta: float, eps: float) -> float:
    """Distance between the delta-thin and eps-thick parts of a horocusp."""
    if not 0 < delta <= eps:
        raise ValueError(f"need 0 < delta <= eps, got delta={delta!r}, eps={eps!r}")
    return math.log(math.sinh(0.5 * eps) / math.sinh(0.5 * delta))


def injrad_at_radius(N: ModelSolidTorus, r: float) -> float:
    """Twice the injectivity radius at distance ``r`` from the core.

    The least displacement of a point at radius ``r`` over the nontrivial
    deck transformations: the elliptic generator (singular case) and the
    loxodromic powers with rotation reduced modulo ``alpha``. Power n moves
    every point by at least ``n * lam``, which bounds the scan.
    """
    if not r >= 0:
        raise ValueError(f"radius must be >= 0, got {r!r}")
    best = math.inf if N.nonsingular else float(displacement(r, 0.0, N.alpha))
    start, size = 1, 64
    while True:
        stop = start + size - 1
        if math.isfinite(best):
            stop = min(stop, math.ceil(best / N.lam))
        if start > stop:
            return best
        ns = np.arange(start, stop + 1, dtype=float)
        d = displacement(r, ns * N.lam, sym_mod_array(ns * N.tau, N.alpha))
        best = min(best, float(d.min()))
        start, size = stop + 1, 2 * size


def tube_radius_oracle(N: ModelSolidTorus, eps: float) -> float:
    """Tube radius found by bisection on :func:`injrad_at_radius`."""
    if not eps > 0:
        raise ValueError(f"eps must be positive, got {eps!r}")
    at_core = injrad_at_radius(N, 0.0)
    # At eps = lam the core displacement can round a few ulps either way.
    if math.isclose(at_core, eps, rel_tol=1e-14):
        return 0.0
    if at_core > eps:
        return NEG_INF
    hi = 1.0
    while injrad_at_radius(N, hi) <= eps:
        hi *= 2.0
        if hi > ORACLE_MAX_RADIUS:
            raise RuntimeError(f"no bracket for eps={eps!r} below r={ORACLE_MAX_RADIUS}")
    return bisect(lambda r: injrad_at_radius(N, r) - eps, 0.0, hi, xtol=ORACLE_XTOL)
