import numpy as np
import pytest
from hypothesis import strategies as st

from schwarz_bounds.power_series import Series
from schwarz_bounds.schur import SchurParams, schur_eval


def complexes(max_magnitude=3.0):
    return st.complex_numbers(max_magnitude=max_magnitude, allow_nan=False, allow_infinity=False)


@st.composite
def series(draw, order=None, min_a0=0.0):
    n = draw(st.integers(0, 8)) if order is None else order
    coeffs = draw(st.lists(complexes(), min_size=n + 1, max_size=n + 1))
    if abs(coeffs[0]) < min_a0:
        coeffs[0] = coeffs[0] + min_a0 + 0.5
    return Series(coeffs)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def random_series(rng, order, scale=1.0):
    return Series(scale * (rng.normal(size=order + 1) + 1j * rng.normal(size=order + 1)))


def cauchy_coeffs(p: SchurParams, n: int, radius=0.5, points=256):
    """Taylor coefficients 0..n from pointwise values on a circle (trapezoid rule)."""
    w = np.exp(2j * np.pi * np.arange(points) / points)
    vals = np.array([schur_eval(p, radius * x) for x in w])
    fft = np.fft.fft(vals) / points
    return fft[: n + 1] / radius ** np.arange(n + 1)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
