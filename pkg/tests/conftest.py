import numpy as np
import pytest

from rhfactor.curve import from_fourier, unit_circle

_ACCEPTANCE = []


@pytest.fixture
def circle256():
    return unit_circle(256)


@pytest.fixture
def circle64():
    return unit_circle(64)


@pytest.fixture
def ellipse256():
    return from_fourier({1: 1.0, -1: 0.3}, 256)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def criterion():
    """Record-and-assert helper for the acceptance module."""
    def check(label, ok, detail=""):
        _ACCEPTANCE.append((label, bool(ok), detail))
        assert ok, f"{label}: {detail}"
    return check


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}")
