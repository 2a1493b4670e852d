import math

import numpy as np
import pytest

TWO_PI = 2.0 * math.pi


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_torus_params(rng, lam_max=0.3):
    """(alpha, lam, tau) with alpha = 2pi half the time."""
    alpha = TWO_PI if rng.random() < 0.5 else float(rng.uniform(0.01, TWO_PI))
    lam = float(rng.uniform(1e-4, lam_max))
    tau = float(rng.uniform(-math.pi, math.pi))
    return alpha, lam, tau


_VERDICTS = {}


@pytest.fixture
def verdict():
    """Record one PASS/FAIL line for an acceptance criterion, then assert it."""

    def record(number: int, ok: bool, detail: str):
        line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
        _VERDICTS[number] = line
        print(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter):
    if _VERDICTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(_VERDICTS):
            terminalreporter.write_line(_VERDICTS[number])
