"""Effective bounds on the distance between thin tubes.

For ``0 < delta < eps <= 0.3`` and any model solid torus with core length
``lam <= delta``,

    max((eps - delta)/2, arccosh(eps / sqrt(7.256 delta)) - 0.0424)
        <= r(eps) - r(delta)
        <= arccosh sqrt((cosh eps - 1) / (cosh delta - 1)).

For larger ``eps_max <= 1.475`` the additive constant becomes
``arcsinh(j_max)``, the maximum of :func:`j_function` along ``eps = eps_max``.
Note that the main-theorem constant 0.0424 is a rounding up of
``arcsinh(j_max(0.3)) = 0.042344...``; both are used as stated.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from functools import lru_cache
from typing import Optional

import numpy as np

from .geometry import TWO_PI, trad
from .trig import NEG_INF, arccosh_ext, cosh_minus_one, one_minus_cos
from .tube import EmptyThinPartError, ModelSolidTorus, Realizer, tube_radius

DEPTH_CONST = 7.256  # rounds 4 pi / sqrt(3) = 7.2551... up
SHARP_DEPTH_CONST = 4.0 * math.pi / math.sqrt(3.0)
R_MIN = 0.0424
DEEP_CONST = 1.268
EPS_MAX = 0.3
EPS_MAX_GENERAL = 1.475
LAMBDA_MAX = 2.97
CGM_CONST = 2.0 * math.pi / math.sqrt(3.0)
CERT_TOL = 1e-9

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


class BoundViolationError(ArithmeticError):
    """A claimed inequality failed numerically."""


class SearchExhaustedError(RuntimeError):
    """A bounded search ran past its proven limit."""


def lower_bound(delta: float, eps: float, r_min: float = R_MIN) -> float:
    """Lower bound on the distance between the delta- and eps-tubes."""
    if not 0 < delta <= eps:
        raise ValueError(f"need 0 < delta <= eps, got delta={delta!r}, eps={eps!r}")
    linear = 0.5 * (eps - delta)
    # NEG_INF - r_min stays NEG_INF and never wins the max.
    log_term = arccosh_ext(eps / math.sqrt(DEPTH_CONST * delta)) - r_min
    return max(linear, log_term)


def upper_bound(delta: float, eps: float) -> float:
    """Sharp upper bound arccosh sqrt((cosh eps - 1)/(cosh delta - 1)).

    This is exactly the translation radius trad(delta, 0, eps), which is
    also how it is evaluated: sinh^2 d = (cosh eps - cosh delta)/(cosh delta - 1).
    """
    if not 0 < delta <= eps:
        raise ValueError(f"need 0 < delta <= eps, got delta={delta!r}, eps={eps!r}")
    return trad(delta, 0.0, eps)


def j_function(delta: float, eps: float) -> float:
    """Comparison function used to fix the additive constant r_min."""
    if not (eps > 0 and delta >= 0):
        raise ValueError("need eps > 0 and delta >= 0")
    a = delta / DEPTH_CONST
    b = a - (delta / eps) ** 2
    if b < 0:
        # Rounding at the boundary delta = eps^2/7.256.
        if b > -1e-14 * a:
            b = 0.0
        else:
            raise ValueError(f"delta={delta!r} exceeds eps^2/7.256 for eps={eps!r}")
    return (math.sqrt(a) + math.sqrt(b)) / DEEP_CONST


def golden_section_max(f, a: float, b: float, tol: float = 1e-12) -> float:
    """Maximizer of a unimodal ``f`` on ``[a, b]``, to within ``tol``."""
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = f(d)
    return 0.5 * (a + b)


def _j_grid(eps: float, points: int):
    delta = np.linspace(0.0, eps * eps / DEPTH_CONST, points)
    a = delta / DEPTH_CONST
    b = np.clip(a - (delta / eps) ** 2, 0.0, None)
    return delta, (np.sqrt(a) + np.sqrt(b)) / DEEP_CONST


@lru_cache(maxsize=None)
def j_argmax(eps: float) -> tuple[float, float]:
    """``(delta*, j_max)`` for j(., eps) on ``[0, eps^2/7.256]``.

    Unimodality is checked first: the finite-difference slope on a 10^4
    point grid must change sign exactly once.
    """
    if not eps > 0:
        raise ValueError(f"eps must be positive, got {eps!r}")
    _, values = _j_grid(eps, 10_000)
    slope = np.sign(np.diff(values))
    slope = slope[slope != 0]
    changes = int(np.count_nonzero(slope[1:] != slope[:-1]))
    if changes != 1:
        raise RuntimeError(f"j(., {eps}) has {changes} slope sign changes, expected 1")
    right = eps * eps / DEPTH_CONST
    x = golden_section_max(lambda d: j_function(min(d, right), eps), 0.0, right, 1e-12 * right)
    return x, j_function(x, eps)


def r_min_for(eps_max: float) -> float:
    """Additive constant arcsinh(j_max) for the bound with ``eps <= eps_max``."""
    if not 0 < eps_max <= EPS_MAX_GENERAL:
        raise ValueError(f"eps_max must lie in (0, {EPS_MAX_GENERAL}], got {eps_max!r}")
    return math.asinh(j_argmax(float(eps_max))[1])


def certificate_r_min(eps_max: float) -> float:
    if eps_max <= EPS_MAX:
        return R_MIN
    return max(R_MIN, r_min_for(eps_max))


def depth_lower_bound(eps: float, lam: float) -> float:
    """Lower bound eps / sqrt(7.256 lam) for cosh r(eps)."""
    if not 0 < lam <= LAMBDA_MAX:
        raise ValueError(f"core length must lie in (0, {LAMBDA_MAX}], got {lam!r}")
    if not eps > 0:
        raise ValueError(f"eps must be positive, got {eps!r}")
    return eps / math.sqrt(DEPTH_CONST * lam)


def cgm_power_search(lam: float, tau: float) -> int:
    """Smallest m >= 1 with cosh(m lam) - cos(m tau) <= (2 pi/sqrt 3) lam.

    Past ``m_max`` the term cosh(m lam) - 1 alone exceeds the bound, so
    running out of candidates is a hard error.
    """
    if not 0 < lam <= LAMBDA_MAX:
        raise ValueError(f"core length must lie in (0, {LAMBDA_MAX}], got {lam!r}")
    bound = CGM_CONST * lam
    m_max = math.ceil(math.acosh(1.0 + bound) / lam) + 1
    for m in range(1, m_max + 1):
        if cosh_minus_one(m * lam) + one_minus_cos(m * tau) <= bound:
            return m
    raise SearchExhaustedError(f"no short power for lam={lam!r}, tau={tau!r} up to m={m_max}")


def mult_gap_bound(N: ModelSolidTorus, delta: float, eps: float) -> tuple[float, float]:
    """``(cosh r(eps) / cosh r(delta), sqrt((cosh eps - 1)/(cosh delta - 1)))``.

    The first entry never exceeds the second.
    """
    if not 0 < delta < eps:
        raise ValueError(f"need 0 < delta < eps, got delta={delta!r}, eps={eps!r}")
    r_delta = tube_radius(N, delta).radius
    if r_delta == NEG_INF:
        raise EmptyThinPartError(f"{N} has empty {delta}-thin part")
    ratio = math.cosh(tube_radius(N, eps).radius) / math.cosh(r_delta)
    return ratio, math.cosh(upper_bound(delta, eps))


@dataclass(frozen=True)
class BoundsCertificate:
    torus: ModelSolidTorus
    delta: float
    eps: float
    actual: float
    lower_linear: float
    lower_log: float
    upper: float
    r_min: float
    lower_ok: bool
    upper_ok: bool
    realizer_delta: Optional[Realizer]
    realizer_eps: Optional[Realizer]
    in_hypothesis: bool = True

    @property
    def lower(self) -> float:
        return max(self.lower_linear, self.lower_log)

    @property
    def ok(self) -> bool:
        return self.lower_ok and self.upper_ok

    @property
    def lower_margin(self) -> float:
        return self.actual - self.lower

    @property
    def upper_margin(self) -> float:
        return self.upper - self.actual

    def as_row(self) -> dict:
        row = asdict(self)
        del row["torus"]
        row = {"alpha": self.torus.alpha, "lambda": self.torus.lam, "tau": self.torus.tau, **row}
        row["realizer_delta"] = 0 if self.realizer_delta is None else self.realizer_delta.code
        row["realizer_eps"] = 0 if self.realizer_eps is None else self.realizer_eps.code
        return row


def certify(N: ModelSolidTorus, delta: float, eps: float, actual: float, r_min: float,
            realizer_delta: Optional[Realizer] = None, realizer_eps: Optional[Realizer] = None,
            in_hypothesis: bool = True) -> BoundsCertificate:
    """Test a given distance value against both bounds."""
    linear = 0.5 * (eps - delta)
    log_term = arccosh_ext(eps / math.sqrt(DEPTH_CONST * delta)) - r_min
    upper = upper_bound(delta, eps)
    return BoundsCertificate(
        torus=N, delta=delta, eps=eps, actual=actual,
        lower_linear=linear, lower_log=log_term, upper=upper, r_min=r_min,
        lower_ok=actual >= max(linear, log_term) - CERT_TOL,
        upper_ok=actual <= upper + CERT_TOL,
        realizer_delta=realizer_delta, realizer_eps=realizer_eps,
        in_hypothesis=in_hypothesis,
    )


def check_bounds(N: ModelSolidTorus, delta: float, eps: float, eps_max: float = EPS_MAX,
                 strict: bool = True) -> BoundsCertificate:
    """Compute r(eps) - r(delta) and test it against both bounds.

    With ``strict=False``, inputs outside the theorem's hypotheses
    (``lam > delta`` or ``eps > eps_max``) are evaluated anyway and the
    certificate is marked ``in_hypothesis=False``.
    """
    if not 0 < delta < eps:
        raise ValueError(f"need 0 < delta < eps, got delta={delta!r}, eps={eps!r}")
    if not 0 < eps_max <= EPS_MAX_GENERAL:
        raise ValueError(f"eps_max must lie in (0, {EPS_MAX_GENERAL}], got {eps_max!r}")
    problems = []
    if N.lam > delta:
        problems.append(f"core length {N.lam!r} exceeds delta={delta!r}")
    if eps > eps_max:
        problems.append(f"eps={eps!r} exceeds eps_max={eps_max!r}")
    if problems and strict:
        raise ValueError("; ".join(problems))
    at_delta = tube_radius(N, delta)
    if at_delta.empty:
        raise EmptyThinPartError(f"{N} has empty {delta}-thin part")
    at_eps = tube_radius(N, eps)
    return certify(N, delta, eps, at_eps.radius - at_delta.radius, certificate_r_min(eps_max),
                   at_delta.realizer, at_eps.realizer, in_hypothesis=not problems)


def random_tuples(rng: np.random.Generator, count: int, eps_max: float = EPS_MAX,
                  lam_floor: float = 1e-6):
    """Random ``(alpha, lam, tau, delta, eps)`` inside the theorem's hypotheses.

    ``(delta, eps)`` is uniform on ``0 < delta < eps <= eps_max``; ``lam`` is
    log-uniform on ``[lam_floor, delta]``; ``tau`` is uniform on ``[-pi, pi)``;
    ``alpha`` is 2 pi with probability 1/2 and otherwise uniform on
    ``(0.01, 2 pi)``.
    """
    out = []
    while len(out) < count:
        pair = np.sort(rng.uniform(0.0, eps_max, size=2))
        delta, eps = float(pair[0]), float(pair[1])
        if not 0 < delta < eps:
            continue
        lo = min(lam_floor, delta)
        lam = min(delta, math.exp(rng.uniform(math.log(lo), math.log(delta))))
        tau = float(rng.uniform(-math.pi, math.pi))
        alpha = TWO_PI if rng.random() < 0.5 else float(rng.uniform(0.01, TWO_PI))
        out.append((alpha, lam, tau, delta, eps))
    return out
