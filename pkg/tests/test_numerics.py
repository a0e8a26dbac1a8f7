"""Tests for root finding, quadrature, operators and unitary propagation."""
import math

import numpy as np
import pytest
from pydantic import ValidationError
from scipy.linalg import expm
from scipy.stats import unitary_group

from app.errors import BracketError, DomainError
from app.numerics.operators import (
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    dagger,
    embed,
    hermiticity_error,
    nearest_unitary,
    transverse,
    unitarity_error,
)
from app.numerics.propagators import propagate_unitary, propagate_unitary_trace
from app.numerics.roots import find_root, integrate
from app.schemas.numerics import ToleranceConfig


def _rk4(hamiltonian, t0, t1, steps):
    """Fixed-step RK4 reference propagator."""
    u = np.eye(2, dtype=complex)
    h = (t1 - t0) / steps
    t = t0

    def f(s, y):
        return -1j * hamiltonian(s) @ y

    for _ in range(steps):
        k1 = f(t, u)
        k2 = f(t + h / 2, u + h / 2 * k1)
        k3 = f(t + h / 2, u + h / 2 * k2)
        k4 = f(t + h, u + h * k3)
        u = u + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
        t += h
    return u


def test_find_root_simple():
    root = find_root(lambda x: x * x - 2.0, 0.0, 2.0)
    assert root == pytest.approx(math.sqrt(2.0), abs=1e-12)


def test_find_root_reports_bracket():
    with pytest.raises(BracketError) as info:
        find_root(lambda x: x * x + 1.0, -1.0, 1.0, what="test root")
    assert info.value.lo == -1.0
    assert info.value.hi == 1.0


def test_integrate_sine():
    assert integrate(math.sin, 0.0, math.pi) == pytest.approx(2.0, abs=1e-12)


def test_transverse_decomposition():
    for phi in (0.0, 0.4, math.pi / 2, 2.9):
        expected = math.cos(phi) * SIGMA_X + math.sin(phi) * SIGMA_Y
        assert np.allclose(transverse(phi), expected, atol=1e-15)
        assert hermiticity_error(transverse(phi)) < 1e-15


def test_nearest_unitary_repairs_drift(rng):
    u = unitary_group.rvs(2, random_state=7)
    noisy = u + 1e-6 * rng.standard_normal((2, 2))
    assert unitarity_error(noisy) > 1e-8
    fixed = nearest_unitary(noisy)
    assert unitarity_error(fixed) < 1e-13
    assert np.max(np.abs(fixed - u)) < 1e-5


def test_embed():
    out = embed(SIGMA_X, 3)
    assert out.shape == (3, 3)
    assert np.array_equal(out[:2, :2], SIGMA_X)
    assert out[2, 2] == 1


def test_tolerance_config_bounds():
    assert ToleranceConfig().step == pytest.approx(2 * math.pi / 50)
    with pytest.raises(ValidationError):
        ToleranceConfig(abs_tol=1e-6)
    with pytest.raises(ValidationError):
        ToleranceConfig(rel_tol=1e-4)
    with pytest.raises(ValidationError):
        ToleranceConfig(max_step=1.0)


def test_constant_hamiltonian_matches_expm():
    h = 0.3 * SIGMA_Z + 0.7 * SIGMA_X
    u = propagate_unitary(lambda t: h, 0.0, 5.0)
    assert np.allclose(u, expm(-1j * h * 5.0), atol=1e-9)
    assert unitarity_error(u) < 1e-10


def test_time_dependent_against_rk4():
    def hamiltonian(t):
        return 0.5 * 1.1 * SIGMA_Z + 0.2 * math.cos(t) * SIGMA_X

    u = propagate_unitary(hamiltonian, 0.0, 4 * math.pi)
    reference = _rk4(hamiltonian, 0.0, 4 * math.pi, 20000)
    assert np.max(np.abs(u - reference)) < 1e-8


def test_propagation_edges():
    h = 0.5 * SIGMA_Z
    assert np.array_equal(propagate_unitary(lambda t: h, 1.0, 1.0), np.eye(2))
    with pytest.raises(DomainError):
        propagate_unitary(lambda t: h, 2.0, 1.0)


def test_initial_matrix_is_composed():
    h = 0.4 * SIGMA_X
    u0 = expm(-1j * 0.3 * SIGMA_Z)
    u = propagate_unitary(lambda t: h, 0.0, 2.0, u0=u0)
    assert np.allclose(u, expm(-1j * h * 2.0) @ u0, atol=1e-9)


def test_trace_matches_single_propagations():
    def hamiltonian(t):
        return 0.5 * SIGMA_Z + 0.1 * math.sin(2 * t) * SIGMA_Y

    times = np.linspace(0.0, 6.0, 7)
    trace = propagate_unitary_trace(hamiltonian, times)
    assert trace.shape == (7, 2, 2)
    assert np.array_equal(trace[0], np.eye(2))
    for t, u in zip(times[1:], trace[1:]):
        single = propagate_unitary(hamiltonian, 0.0, float(t))
        assert np.max(np.abs(u - single)) < 1e-8
        assert np.allclose(dagger(u) @ u, np.eye(2), atol=1e-10)


def test_propagator_composition():
    def hamiltonian(t):
        return 0.5 * 1.05 * SIGMA_Z + 0.3 * math.cos(t + 0.2) * SIGMA_X

    u10 = propagate_unitary(hamiltonian, 0.0, 2.5)
    u21 = propagate_unitary(hamiltonian, 2.5, 7.0)
    u20 = propagate_unitary(hamiltonian, 0.0, 7.0)
    assert np.max(np.abs(u20 - u21 @ u10)) < 1e-8
