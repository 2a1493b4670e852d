"""Extended-real trigonometric primitives.

Radii and lengths are plain floats. An empty or undefined length is
``NEG_INF`` (``-math.inf``), so ``max`` over a family of translation radii
needs no special casing: a ``NEG_INF`` entry never realizes the maximum
unless every entry is ``NEG_INF``.
"""

from __future__ import annotations

import math

NEG_INF = -math.inf

# Below this, f_cosh and g_cos switch to their Taylor series.
SERIES_THRESHOLD = 1e-4


def is_empty(x: float) -> bool:
    """True for the NEG_INF length."""
    return x == NEG_INF


def arccosh_ext(x: float) -> float:
    """arccosh extended by ``arccosh(x) = NEG_INF`` for ``x < 1``.

    Near ``x = 1`` the result is computed from the increment ``u = x - 1`` so
    that small radii keep full relative precision.
    """
    if math.isnan(x):
        raise ValueError("arccosh_ext of NaN")
    if x < 1.0:
        return NEG_INF
    u = x - 1.0
    if u < 1.0:
        return math.log1p(u + math.sqrt(u * (u + 2.0)))
    return math.acosh(x)


def arccosh_from_increment(u: float) -> float:
    """arccosh(1 + u) for ``u >= 0`` without forming ``1 + u``.

    Uses cosh d - 1 = 2 sinh^2(d/2). Negative ``u`` gives NEG_INF.
    """
    if u < 0.0:
        return NEG_INF
    return 2.0 * math.asinh(math.sqrt(0.5 * u))


def sym_mod(a: float, b: float) -> float:
    """Representative of ``a`` modulo ``b`` in the half-open ``[-b/2, b/2)``."""
    if not b > 0:
        raise ValueError(f"modulus must be positive, got {b!r}")
    half = 0.5 * b
    if -half <= a < half:
        return a
    x = a - b * math.floor((a + half) / b)
    # Rounding in the floor step can land one period off.
    if x >= half:
        x -= b
    elif x < -half:
        x += b
    return x


def f_cosh(x: float) -> float:
    """(cosh x - 1)/x^2, continuously extended by 1/2 at 0."""
    if x < 0:
        raise ValueError(f"f_cosh needs x >= 0, got {x!r}")
    if x < SERIES_THRESHOLD:
        x2 = x * x
        return 0.5 + x2 / 24.0 + x2 * x2 / 720.0
    s = math.sinh(0.5 * x) / x
    return 2.0 * s * s


def g_cos(x: float) -> float:
    """(1 - cos x)/x^2, continuously extended by 1/2 at 0."""
    if x < 0:
        raise ValueError(f"g_cos needs x >= 0, got {x!r}")
    if x < SERIES_THRESHOLD:
        x2 = x * x
        return 0.5 - x2 / 24.0 + x2 * x2 / 720.0
    s = math.sin(0.5 * x) / x
    return 2.0 * s * s


def cosh_minus_one(x: float) -> float:
    """cosh x - 1 without cancellation near 0."""
    s = math.sinh(0.5 * x)
    return 2.0 * s * s


def one_minus_cos(x: float) -> float:
    """1 - cos x without cancellation near 0."""
    s = math.sin(0.5 * x)
    return 2.0 * s * s


def cosh_difference(a: float, b: float) -> float:
    """cosh a - cosh b, accurate when a and b are close."""
    return 2.0 * math.sinh(0.5 * (a + b)) * math.sinh(0.5 * (a - b))


def mobius_ratio(x: float, a: float, b: float) -> float:
    """The linear fractional map (x - a)/(x - b).

    Increasing in ``x`` when ``b < a`` and decreasing when ``a < b`` (away
    from the pole ``x = b``). Several radius comparisons reduce to this.
    """
    return (x - a) / (x - b)
