import pytest

from drpkit.modeq import SchemeParams
from drpkit.stencil import optimize_coefficients


@pytest.fixture(scope="session")
def m1_coeffs():
    return optimize_coefficients(1)


@pytest.fixture(scope="session")
def m3_coeffs():
    return optimize_coefficients(3)


@pytest.fixture()
def unit_params():
    """sigma = mu = Re_h = 1 with h = h0 = 1."""
    return SchemeParams.from_cfl(sigma=1.0, mu=1.0, re_h=1.0)
