"""Command-line front end.

Every subcommand emits a table, as CSV (header row, floats with 12
significant digits) or JSON (``{"rows": [...], "summary": {...}}``).
Exit codes: 0 success, 1 bound violation, 2 invalid input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import math
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import bounds, sharpness
from .geometry import TWO_PI
from .trig import NEG_INF
from .tube import (
    EmptyThinPartError,
    ModelSolidTorus,
    cusp_distance,
    tube_radius,
    tube_radius_many,
    tube_radius_oracle,
)

log = logging.getLogger("tubedist")

EXIT_OK, EXIT_VIOLATION, EXIT_INVALID = 0, 1, 2
ALPHA_SNAP = 1e-9
ORACLE_RESIDUAL_TOL = 1e-6


class InvalidInput(ValueError):
    pass


def parse_alpha(text: str) -> float:
    """Cone angle in radians; values at or above 2 pi become exactly 2 pi."""
    try:
        alpha = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not alpha > 0 or not math.isfinite(alpha):
        raise argparse.ArgumentTypeError(f"cone angle must be positive, got {text}")
    if alpha >= TWO_PI - ALPHA_SNAP:
        if alpha - TWO_PI > ALPHA_SNAP:
            log.warning("cone angle %s clamped to 2pi (nonsingular)", text)
        return TWO_PI
    return alpha


def format_value(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (float, np.floating)):
        x = float(x)
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        return format(x, ".12g")
    return str(x)


def json_value(x):
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (float, np.floating)):
        x = float(x)
        return x if math.isfinite(x) else None
    return x


def render(rows: list[dict], summary: dict, fmt: str) -> str:
    if fmt == "json":
        doc = {
            "rows": [{k: json_value(v) for k, v in row.items()} for row in rows],
            "summary": {k: json_value(v) for k, v in summary.items()},
        }
        return json.dumps(doc, indent=1) + "\n"
    buf = io.StringIO()
    if rows:
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(rows[0].keys())
        for row in rows:
            writer.writerow(format_value(v) for v in row.values())
    return buf.getvalue()


def summary_line(summary: dict) -> str:
    return "# " + " ".join(f"{k}={format_value(v)}" for k, v in summary.items())


def emit(args, rows: list[dict], summary: dict | None = None) -> None:
    summary = summary or {}
    text = render(rows, summary, args.format)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
        if summary:
            print(summary_line(summary))
    else:
        sys.stdout.write(text)
        if summary and args.format == "csv":
            print(summary_line(summary), file=sys.stderr)


def parallel_map(fn, items, threads: int):
    """Ordered map; results do not depend on the thread count."""
    if threads <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def grid(lo: float, hi: float, steps: int) -> np.ndarray:
    if steps < 1 or (steps == 1 and lo != hi) or (steps > 1 and not lo < hi):
        raise InvalidInput(f"bad grid [{lo}, {hi}] with {steps} steps "
                           "(need lo < hi and steps >= 2, or lo == hi and steps == 1)")
    return np.linspace(lo, hi, steps)


def make_torus(alpha: float, lam: float, tau: float) -> ModelSolidTorus:
    try:
        return ModelSolidTorus(alpha, lam, tau)
    except ValueError as exc:
        raise InvalidInput(str(exc))


# -- subcommands -------------------------------------------------------------

def cmd_radius(args) -> int:
    N = make_torus(args.alpha, args.lam, args.tau)
    if not args.eps > 0:
        raise InvalidInput("eps must be positive")
    res = tube_radius(N, args.eps)
    row = {"alpha": N.alpha, "lambda": N.lam, "tau": N.tau, "eps": args.eps,
           "radius": res.radius, "power": res.code,
           "realizer": "empty thin part" if res.empty else str(res.realizer)}
    status = EXIT_OK
    if args.oracle:
        oracle = tube_radius_oracle(N, args.eps)
        if res.empty and oracle == NEG_INF:
            residual = 0.0
        else:
            residual = abs(oracle - res.radius)
        row.update(oracle=oracle, residual=residual)
        if not residual < ORACLE_RESIDUAL_TOL:
            log.error("oracle disagrees with the closed form by %g", residual)
            status = EXIT_VIOLATION
    if res.empty:
        print("empty thin part", file=sys.stderr)
    emit(args, [row])
    return status


def cmd_distance(args) -> int:
    N = make_torus(args.alpha, args.lam, args.tau)
    try:
        cert = bounds.check_bounds(N, args.delta, args.eps, args.eps_max,
                                   strict=not args.allow_out_of_hypothesis)
    except EmptyThinPartError as exc:
        raise InvalidInput(str(exc))
    emit(args, [cert.as_row()])
    if cert.in_hypothesis and not cert.ok:
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_region_map(args) -> int:
    if not args.eps > 0:
        raise InvalidInput("eps must be positive")
    lams = grid(args.lambda_min, args.lambda_max, args.lambda_steps)
    taus = grid(args.tau_min, args.tau_max, args.tau_steps)
    if not lams[0] > 0:
        raise InvalidInput("core lengths must be positive")

    def column(lam):
        return tube_radius_many(args.alpha, float(lam), taus, args.eps)[1]

    codes = parallel_map(column, lams, args.threads)
    rows = [{"lambda": float(lam), "tau": float(tau), "power": int(code)}
            for lam, col in zip(lams, codes) for tau, code in zip(taus, col)]
    found = sorted({r["power"] for r in rows})
    emit(args, rows, {"eps": args.eps, "cells": len(rows), "powers": " ".join(map(str, found))})
    return EXIT_OK


def surface_rows(alpha, delta, eps, lams, taus, threads=1):
    """Rows (lambda, tau, distance) of r(eps) - r(delta) over a grid."""

    def column(lam):
        r_delta, _ = tube_radius_many(alpha, float(lam), taus, delta)
        r_eps, _ = tube_radius_many(alpha, float(lam), taus, eps)
        if np.any(r_delta == NEG_INF):
            raise InvalidInput(f"empty {delta}-thin part at lambda={lam}")
        return r_eps - r_delta

    cols = parallel_map(column, lams, threads)
    return [{"lambda": float(lam), "tau": float(tau), "distance": float(d)}
            for lam, col in zip(lams, cols) for tau, d in zip(taus, col)]


def cmd_surface(args) -> int:
    if not 0 < args.delta < args.eps:
        raise InvalidInput("need 0 < delta < eps")
    lam_max = args.delta if args.lambda_max is None else args.lambda_max
    lam_min = lam_max / args.lambda_steps if args.lambda_min is None else args.lambda_min
    lams = grid(lam_min, lam_max, args.lambda_steps)
    taus = grid(args.tau_min, args.tau_max, args.tau_steps)
    if not lams[0] > 0:
        raise InvalidInput("core lengths must be positive")
    if lams[-1] > args.delta and not args.allow_out_of_hypothesis:
        raise InvalidInput("core lengths must not exceed delta")
    rows = surface_rows(args.alpha, args.delta, args.eps, lams, taus, args.threads)
    dist = [r["distance"] for r in rows]
    summary = {"delta": args.delta, "eps": args.eps, "min": min(dist), "max": max(dist),
               "lower_bound": bounds.lower_bound(args.delta, args.eps),
               "upper_bound": bounds.upper_bound(args.delta, args.eps)}
    emit(args, rows, summary)
    return EXIT_OK


def cmd_verify(args) -> int:
    if not 0 < args.eps_max <= bounds.EPS_MAX_GENERAL:
        raise InvalidInput(f"eps-max must lie in (0, {bounds.EPS_MAX_GENERAL}]")
    if args.samples < 1:
        raise InvalidInput("need at least one sample")
    rng = np.random.default_rng(args.seed)
    tuples = bounds.random_tuples(rng, args.samples, args.eps_max)

    def run(t):
        alpha, lam, tau, delta, eps = t
        return bounds.check_bounds(ModelSolidTorus(alpha, lam, tau), delta, eps, args.eps_max)

    certs = parallel_map(run, tuples, args.threads)
    if args.self_test:
        # The sharp torus attains the upper bound, so +1 must be flagged.
        _, _, _, delta, eps = tuples[0]
        N = ModelSolidTorus(TWO_PI, delta, 0.0)
        honest = bounds.check_bounds(N, delta, eps, args.eps_max)
        certs.append(bounds.certify(N, delta, eps, honest.actual + 1.0, honest.r_min,
                                    honest.realizer_delta, honest.realizer_eps))
    violations = sum(not c.ok for c in certs)
    summary = {"samples": len(certs), "seed": args.seed, "eps_max": args.eps_max,
               "r_min": bounds.certificate_r_min(args.eps_max), "violations": violations,
               "worst_lower_margin": min(c.lower_margin for c in certs),
               "worst_upper_margin": min(c.upper_margin for c in certs)}
    emit(args, [c.as_row() for c in certs], summary)
    return EXIT_VIOLATION if violations else EXIT_OK


def cmd_sharpness(args) -> int:
    try:
        w = sharpness.sharpness_example(args.delta, args.eps)
    except bounds.BoundViolationError as exc:
        log.error("%s", exc)
        return EXIT_VIOLATION
    emit(args, [{"delta": w.delta, "eps": w.eps, "n": w.n, "lambda": w.torus.lam,
                 "tau": w.torus.tau, "actual_distance": w.actual_distance,
                 "sharpness_upper": w.sharpness_upper, "gap_to_lower": w.gap_to_lower}])
    return EXIT_OK


def cmd_cusp(args) -> int:
    d = cusp_distance(args.delta, args.eps)
    lo = bounds.lower_bound(args.delta, args.eps)
    hi = bounds.upper_bound(args.delta, args.eps)
    lower_ok = d >= lo - bounds.CERT_TOL
    upper_ok = d <= hi + bounds.CERT_TOL
    emit(args, [{"delta": args.delta, "eps": args.eps, "distance": d, "lower": lo,
                 "upper": hi, "lower_ok": lower_ok, "upper_ok": upper_ok}])
    return EXIT_OK if lower_ok and upper_ok else EXIT_VIOLATION


# -- argument parsing --------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["csv", "json"], default="csv")
    common.add_argument("--out", metavar="PATH", help="write the table here instead of stdout")
    common.add_argument("--seed", type=int, default=42)
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--oracle", action="store_true",
                        help="cross-check radii by bisection on the injectivity radius")
    common.add_argument("--eps-max", type=float, default=bounds.EPS_MAX)

    parser = argparse.ArgumentParser(prog="tubedist", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def torus_args(p):
        p.add_argument("--alpha", type=parse_alpha, default=TWO_PI, help="cone angle (radians)")
        p.add_argument("--lambda", dest="lam", type=float, required=True)
        p.add_argument("--tau", type=float, required=True)

    def grid_args(p, lam_default=(None, None), steps=200):
        p.add_argument("--lambda-min", type=float, default=lam_default[0])
        p.add_argument("--lambda-max", type=float, default=lam_default[1])
        p.add_argument("--lambda-steps", type=int, default=steps)
        p.add_argument("--tau-min", type=float, default=0.0)
        p.add_argument("--tau-max", type=float, default=math.pi)
        p.add_argument("--tau-steps", type=int, default=steps)

    p = sub.add_parser("radius", parents=[common], help="tube radius and realizing power")
    torus_args(p)
    p.add_argument("--eps", type=float, required=True)
    p.set_defaults(func=cmd_radius)

    p = sub.add_parser("distance", parents=[common], help="tube distance with bound certificate")
    torus_args(p)
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--allow-out-of-hypothesis", action="store_true")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("region-map", parents=[common], help="realizing power over (lambda, tau)")
    p.add_argument("--eps", type=float, default=0.2)
    p.add_argument("--alpha", type=parse_alpha, default=TWO_PI)
    grid_args(p, (0.0005, 0.13))
    p.set_defaults(func=cmd_region_map)

    p = sub.add_parser("surface", parents=[common], help="tube distance over (lambda, tau)")
    p.add_argument("--delta", type=float, default=0.05)
    p.add_argument("--eps", type=float, default=0.2)
    p.add_argument("--alpha", type=parse_alpha, default=TWO_PI)
    p.add_argument("--allow-out-of-hypothesis", action="store_true")
    grid_args(p)
    p.set_defaults(func=cmd_surface)

    p = sub.add_parser("verify", parents=[common], help="random bound-verification campaign")
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--self-test", action="store_true",
                   help="append a deliberately violating row; the run must then fail")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sharpness", parents=[common], help="near-extremal torus for (delta, eps)")
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--eps", type=float, required=True)
    p.set_defaults(func=cmd_sharpness)

    p = sub.add_parser("cusp", parents=[common], help="distance between thin parts of a cusp")
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--eps", type=float, required=True)
    p.set_defaults(func=cmd_cusp)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InvalidInput, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
