import os
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from germring.exactalg import GaussianRational, Poly

ROOT = Path(__file__).resolve().parent.parent
FAMILIES = ROOT / "families"
SCHEMAS = ROOT / "docs" / "schemas"

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", max_examples=500, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

small_int = st.integers(min_value=-6, max_value=6)
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
gaussians = st.builds(GaussianRational, rationals, rationals)


@st.composite
def polys(draw, max_degree=4, nonzero=False, coeffs=gaussians):
    cs = draw(st.lists(coeffs, max_size=max_degree + 1))
    p = Poly(cs)
    if nonzero and not p:
        p = Poly.const(draw(st.integers(min_value=1, max_value=5)))
    return p


def ell_vectors(max_r=4, lo=-5, hi=5, min_r=1):
    return st.lists(st.integers(min_value=lo, max_value=hi), min_size=min_r, max_size=max_r).map(tuple)


@pytest.fixture
def ex361_family():
    from germring.germ import family_from_exprs

    return family_from_exprs(["z", "exp(-z)/z^2", "exp(z)"])


def pytest_terminal_summary(terminalreporter):
    import sys

    results = getattr(sys.modules.get("test_acceptance"), "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
