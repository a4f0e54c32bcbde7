"""
Pytest configuration and fixtures for the test suite.
"""

import os

import pytest

# Set test environment variables before importing the package
os.environ["BMS3_LOG_LEVEL"] = "warning"
os.environ["BMS3_LOG_FORMAT"] = "console"
os.environ["BMS3_MAX_WORKERS"] = "1"
os.environ["BMS3_DEFAULT_IDX_BOUND"] = "2"
os.environ["BMS3_DEFAULT_MAX_E1"] = "1"
os.environ["BMS3_DEFAULT_MAX_E2"] = "1"

from src.algebra.poly import Poly2
from src.algebra.scalar import SQRT2, Scalar
from src.algebra.superalgebra import Sector
from src.schemas.params import ModuleParams, Truncation


@pytest.fixture
def ramond_params():
    """Generic Ramond module: lambda = 2, alpha = 1, h = t."""
    return ModuleParams(lambda_=Scalar(2), alpha=Scalar(1), h=Poly2.var1())


@pytest.fixture
def ramond_params_alpha_zero():
    """Ramond module with alpha = 0 and h = t + 1, so h(0) = 1."""
    return ModuleParams(
        lambda_=Scalar(3), alpha=Scalar(0), h=Poly2.var1() + Poly2.constant(1)
    )


@pytest.fixture
def ns_params():
    """NS module: lambda = 2 with sqrt_lambda = sqrt2, alpha = 1, h = t^2."""
    return ModuleParams(
        lambda_=Scalar(2),
        alpha=Scalar(1),
        h=Poly2.monomial(2, 0),
        sector=Sector.NEVEU_SCHWARZ,
        sqrt_lambda=SQRT2,
    )


@pytest.fixture
def small_window():
    """Window with e1, e2 <= 1, both parities: 8 basis vectors."""
    return Truncation(max_e1=1, max_e2=1)
