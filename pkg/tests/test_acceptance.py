"""Acceptance criteria, one test each, at their stated tolerances.

Each test reports a single PASS/FAIL line (collected in the terminal summary
under "acceptance criteria").
"""

import math
import time

import numpy as np
import pytest

from tubedist.bounds import (
    CERT_TOL,
    DEPTH_CONST,
    R_MIN,
    cgm_power_search,
    check_bounds,
    j_argmax,
    lower_bound,
    r_min_for,
    random_tuples,
    upper_bound,
)
from tubedist.cli import surface_rows
from tubedist.geometry import TWO_PI, cyl_distance, CylindricalPoint, trad
from tubedist.sharpness import (
    BIRINGER_EPS_FACTOR,
    biringer_radius_check,
    biringer_torus,
    biringer_cosh_radius,
    sharpness_example,
)
from tubedist.trig import f_cosh
from tubedist.tube import ModelSolidTorus, Realizer, cusp_distance, tube_distance, tube_radius, tube_radius_oracle

pytestmark = pytest.mark.acceptance


def test_c01_pi_example(verdict):
    t0 = time.perf_counter()
    res = tube_radius(ModelSolidTorus(TWO_PI, 0.1, math.pi), 0.201)
    single = trad(0.1, math.pi, 0.201)
    disp = cyl_distance(CylindricalPoint(0.1001), CylindricalPoint(0.1001, 0.1, math.pi))
    elapsed = time.perf_counter() - t0
    ok = (abs(res.radius - 0.1001) <= 5e-4 and res.realizer == Realizer(2)
          and abs(single - 0.0871) <= 5e-4 and abs(disp - 0.2239) <= 5e-4 and elapsed < 0.1)
    verdict(1, ok, f"r={res.radius:.6f} ({res.realizer}), trad={single:.6f}, d={disp:.6f}, {elapsed * 1e3:.1f} ms")


def test_c02_surface(verdict):
    delta, eps, steps = 0.05, 0.2, 300
    lams = np.linspace(delta / steps, delta, steps)
    taus = np.linspace(0.0, math.pi, steps)
    t0 = time.perf_counter()
    dist = np.array([row["distance"] for row in surface_rows(TWO_PI, delta, eps, lams, taus)])
    elapsed = time.perf_counter() - t0
    lo, hi = dist.min(), dist.max()
    ok = (abs(hi - 2.065) <= 1e-3 and abs(lo - 0.117) <= 5e-3
          and bool(np.all(dist >= 0.075 - 1e-9)) and elapsed < 10)
    verdict(2, ok, f"{steps}x{steps} grid: min={lo:.6f}, max={hi:.6f}, {elapsed:.2f} s")


def test_c03_upper_sharpness(verdict):
    rng = np.random.default_rng(3)
    worst_eq, worst_gap = 0.0, math.inf
    for _ in range(100):
        delta = float(rng.uniform(0.0, 0.3))
        eps = float(rng.uniform(delta, 0.3))
        if not 0 < delta < eps:
            continue
        ub = upper_bound(delta, eps)
        worst_eq = max(worst_eq, abs(tube_distance(ModelSolidTorus(TWO_PI, delta, 0.0), delta, eps) - ub))
        worst_gap = min(worst_gap, ub - tube_distance(ModelSolidTorus(TWO_PI, delta, 1e-3), delta, eps))
    ok = worst_eq <= 1e-12 and worst_gap > 1e-9
    verdict(3, ok, f"max |d - upper| = {worst_eq:.2e}; min slack at tau=1e-3: {worst_gap:.2e}")


def test_c04_main_sandwich(verdict):
    rng = np.random.default_rng(42)
    t0 = time.perf_counter()
    certs = [check_bounds(ModelSolidTorus(a, lam, tau), d, e)
             for a, lam, tau, d, e in random_tuples(rng, 10_000)]
    elapsed = time.perf_counter() - t0
    bad = sum(not c.ok for c in certs)
    ok = bad == 0 and len(certs) == 10_000 and elapsed < 5
    verdict(4, ok, f"10^4 samples: {bad} violations, min lower margin "
                   f"{min(c.lower_margin for c in certs):.2e}, min upper margin "
                   f"{min(c.upper_margin for c in certs):.2e}, {elapsed:.2f} s")


def test_c05_oracle(verdict):
    rng = np.random.default_rng(5)
    t0 = time.perf_counter()
    worst = 0.0
    for _ in range(1000):
        alpha = TWO_PI if rng.random() < 0.5 else float(rng.uniform(0.0, TWO_PI))
        lam = float(rng.uniform(0.0, 0.3))
        if not (alpha > 0 and lam > 0):
            continue
        tau = float(rng.uniform(-math.pi, math.pi))
        eps = float(rng.uniform(lam, 0.5))
        N = ModelSolidTorus(alpha, lam, tau)
        a, b = tube_radius(N, eps).radius, tube_radius_oracle(N, eps)
        worst = max(worst, 0.0 if a == b else abs(a - b))
    elapsed = time.perf_counter() - t0
    ok = worst < 1e-6 and elapsed < 5
    verdict(5, ok, f"10^3 tuples: max |closed - oracle| = {worst:.2e}, {elapsed:.2f} s")


def test_c06_comparison_function(verdict):
    delta, jmax = j_argmax(0.3)
    r = r_min_for(0.3)
    ok = abs(jmax - 0.042357) <= 1e-5 and abs(delta - 0.0093026) <= 1e-5 and r <= R_MIN
    verdict(6, ok, f"j_max={jmax:.7f} at delta={delta:.7f}; r_min_for(0.3)={r:.7f}")


def test_c07_biringer(verdict):
    failures, worst = [], 0.0
    for n in range(4, 61):
        for eps in np.linspace(BIRINGER_EPS_FACTOR / n, 0.3, 20):
            eps = float(eps)
            res = tube_radius(biringer_torus(n), eps)
            worst = max(worst, abs(math.cosh(res.radius) - biringer_cosh_radius(n, eps)))
            if not biringer_radius_check(n, eps):
                failures.append((n, eps))
    verdict(7, not failures, f"{57 * 20} cases, {len(failures)} failures, max closed-form error {worst:.1e}")


def test_c08_sharpness(verdict):
    delta_max = 0.3**2 / DEPTH_CONST
    worst_gap, worst_room, count = -math.inf, math.inf, 0
    for delta in np.geomspace(1e-5, delta_max, 50):
        delta = min(float(delta), delta_max)
        for eps in np.linspace(math.sqrt(DEPTH_CONST * delta), 0.3, 50):
            w = sharpness_example(delta, min(float(eps), 0.3))
            worst_gap = max(worst_gap, w.gap_to_lower)
            worst_room = min(worst_room, w.sharpness_upper - w.actual_distance)
            count += 1
    ok = worst_room >= 0 and worst_gap < 2.2
    verdict(8, ok, f"{count} grid points: max gap {worst_gap:.4f}, min room below sharpness bound {worst_room:.2e}")


def test_c09_cgm(verdict):
    rng = np.random.default_rng(9)
    lams = 2.97 - rng.uniform(0.0, 2.97, 10_000)  # (0, 2.97]
    taus = rng.uniform(0.0, TWO_PI, 10_000)
    powers = [cgm_power_search(float(l), float(t)) for l, t in zip(lams, taus)]
    verdict(9, len(powers) == 10_000, f"10^4 searches succeeded, largest power {max(powers)}")


def test_c10_cusp(verdict):
    rng = np.random.default_rng(10)
    bad, count = 0, 0
    while count < 1000:
        delta, eps = (float(x) for x in np.sort(rng.uniform(0.0, 0.3, 2)))
        if not 0 < delta < eps:
            continue
        count += 1
        d = cusp_distance(delta, eps)
        bad += not (lower_bound(delta, eps) - CERT_TOL <= d <= upper_bound(delta, eps) + CERT_TOL)
    verdict(10, bad == 0, f"10^3 pairs: {bad} outside [lower, upper]")


def _cosh_mult(rng, n):
    s = rng.uniform(0.0, 5.0, n)
    r = s * rng.uniform(0.0, 1.0, n)
    r[: n // 10] = 0.0
    r[n // 10: n // 5] = s[n // 10: n // 5]
    lhs, rhs = np.cosh(s - r) * np.cosh(r), np.cosh(s)
    tight = np.isclose(lhs, rhs, rtol=1e-13, atol=0)
    holds = bool(np.all(lhs <= rhs * (1 + 1e-15)))
    at_ends = (r == 0) | (r == s)
    # Equality is detected exactly at the endpoints; well inside it is strict.
    inside = (np.minimum(r, s - r) > 1e-3)
    return holds and bool(np.all(tight[at_ends])) and not bool(np.any(tight[inside]))


def _sinh_cosh_growth(rng, n):
    s = rng.uniform(1e-3, 5.0, n)
    r = s * rng.uniform(1e-3, 1.0, n)
    r[: n // 10] = s[: n // 10]
    mid = np.exp(s - r)
    left, right = np.cosh(s) / np.cosh(r), np.sinh(s) / np.sinh(r)
    holds = bool(np.all(left <= mid * (1 + 1e-14)) and np.all(mid <= right * (1 + 1e-14)))
    eq = r == s
    tight_l = np.isclose(left, mid, rtol=1e-13, atol=0)
    tight_r = np.isclose(mid, right, rtol=1e-13, atol=0)
    inside = s - r > 1e-3
    return holds and bool(np.all(tight_l[eq] & tight_r[eq])) and not bool(np.any((tight_l | tight_r)[inside]))


def _cosh_taylor(rng, n):
    x = np.sort(rng.uniform(0.0, 5.0, (n, 2)), axis=1)
    x = x[x[:, 1] - x[:, 0] > 1e-6]
    f = np.vectorize(f_cosh)
    lo, hi = f(x[:, 0]), f(x[:, 1])
    base = f(rng.uniform(0.0, 5.0, len(x)))
    return bool(np.all(hi > lo) and np.all(hi / base > lo / base) and np.all(base / hi < base / lo))


def _easy_monotonicity(rng, n):
    a, b = rng.uniform(-5, 5, n), rng.uniform(-5, 5, n)
    x = np.sort(rng.uniform(-10, 10, (n, 2)), axis=1)
    keep = ((np.abs(a - b) > 1e-3) & ((x[:, 0] - b) * (x[:, 1] - b) > 0)
            & (np.minimum(np.abs(x[:, 0] - b), np.abs(x[:, 1] - b)) > 1e-3) & (x[:, 1] - x[:, 0] > 1e-6))
    a, b, x = a[keep], b[keep], x[keep]
    g0, g1 = (x[:, 0] - a) / (x[:, 0] - b), (x[:, 1] - a) / (x[:, 1] - b)
    return bool(np.all(np.where(b < a, g1 > g0, g1 < g0))) and len(a) > n // 2


def test_c11_appendix_properties(verdict):
    rng = np.random.default_rng(11)
    n = 10_000
    results = {
        "CoshMult": _cosh_mult(rng, n),
        "SinhCoshGrowth": _sinh_cosh_growth(rng, n),
        "CoshTaylorApprox": _cosh_taylor(rng, n),
        "EasyMonotonicity": _easy_monotonicity(rng, n),
    }
    verdict(11, all(results.values()), ", ".join(f"{k}={'ok' if v else 'FAIL'}" for k, v in results.items()))


def test_c12_general_theorem(verdict):
    rng = np.random.default_rng(12)
    r_min = r_min_for(1.475)
    certs = [check_bounds(ModelSolidTorus(a, lam, tau), d, e, eps_max=1.475)
             for a, lam, tau, d, e in random_tuples(rng, 1000, eps_max=1.475)]
    bad = sum(not c.ok for c in certs)
    ok = bad == 0 and all(c.r_min == r_min for c in certs)
    verdict(12, ok, f"10^3 samples with r_min={r_min:.6f}: {bad} violations")
