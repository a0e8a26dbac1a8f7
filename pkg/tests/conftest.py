"""Pytest fixtures."""
import math

import numpy as np
import pytest

from app.constants import Gate, Protocol
from app.gatesim.calibration import constant_drive_program
from app.synthesis.phase import preset_target
from app.synthesis.program import design_program, synthesize

FAST_SAMPLES = 2000


@pytest.fixture(scope="session")
def hadamard_target():
    return preset_target(Gate.HADAMARD)


@pytest.fixture(scope="session")
def not_target():
    return preset_target(Gate.NOT)


@pytest.fixture(scope="session")
def chrw_hadamard(hadamard_target):
    """CHRW Hadamard program at T = 6 pi / omega."""
    return synthesize(hadamard_target, 6 * math.pi, n_samples=FAST_SAMPLES)


@pytest.fixture(scope="session")
def chrw_not(not_target):
    """CHRW NOT program at T = 5 pi / omega."""
    return synthesize(not_target, 5 * math.pi, n_samples=FAST_SAMPLES)


@pytest.fixture(scope="session")
def rwa_hadamard(hadamard_target):
    return design_program(Protocol.RWA, hadamard_target, 6 * math.pi, n_samples=FAST_SAMPLES)


@pytest.fixture(scope="session")
def idle_program():
    """Undriven qubit at omega_q = 1.1 omega for T = 10 / omega."""
    return constant_drive_program(Protocol.RWA, 0.0, 0.1, 10.0)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
