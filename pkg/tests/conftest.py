"""
Shared fixtures for the galconf test suite.
"""

import random
import sys
from pathlib import Path

import pytest

# Add parent directory to path for imports
parent_dir = str(Path(__file__).parent.parent)
if parent_dir not in sys.path:
    sys.path.insert(0, parent_dir)

from components.arithmetic.polynomials import constant, monomial  # noqa: E402
from components.modules.omega import OmegaSpec  # noqa: E402
from components.whittaker.datum import validate_whittaker  # noqa: E402


@pytest.fixture
def rng():
    return random.Random(1234)


@pytest.fixture
def psi11():
    """psi_{1,1} with alpha = beta = 1."""
    return validate_whittaker({"I[1]": "1", "J[1]": "1"}, 1, 1)


@pytest.fixture
def psi12():
    return validate_whittaker({"I[2]": "1", "J[2]": "1"}, 1, 2)


@pytest.fixture
def sigma_zero_spec():
    return OmegaSpec.sigma_zero(2, "1/3", constant(1))


@pytest.fixture
def zero_sigma_spec():
    return OmegaSpec.zero_sigma(2, "1/3", constant(1))


@pytest.fixture
def delta_only_spec():
    return OmegaSpec.delta_only(2, monomial(1, 0))
