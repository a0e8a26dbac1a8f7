"""Tests for the fluxonium circuit model."""
import math

import numpy as np
import pytest
from pydantic import ValidationError
from scipy.linalg import eigh

from app.errors import DomainError
from app.fluxonium.circuit import (
    build_hamiltonian,
    coupling_ratio,
    device_params,
    drive_current,
    drive_matrix_elements,
    flux_operator,
    is_parity_symmetric,
    parity_operator,
    spectrum,
)
from app.schemas.fluxonium import FluxoniumParams


@pytest.fixture(scope="module")
def harmonic():
    return FluxoniumParams(e_c=0.8, e_l=1.1, e_j=0.0, n_basis=60)


def test_params_validation():
    with pytest.raises(ValidationError):
        FluxoniumParams(e_c=0.0, e_l=1.0, e_j=1.0)
    with pytest.raises(ValidationError):
        FluxoniumParams(e_c=1.0, e_l=1.0, e_j=-1.0)
    with pytest.raises(ValidationError):
        FluxoniumParams(e_c=1.0, e_l=1.0, e_j=1.0, n_basis=20)


def test_hamiltonian_is_symmetric():
    p = FluxoniumParams(e_c=0.9, e_l=0.7, e_j=4.0, phi_ext=1.3, n_basis=50)
    h = build_hamiltonian(p)
    assert h.shape == (50, 50)
    assert np.max(np.abs(h - h.T)) < 1e-10


def test_harmonic_limit(harmonic):
    result = spectrum(harmonic)
    plasma = math.sqrt(8 * 0.8 * 1.1)
    assert result.omega01 == pytest.approx(plasma, rel=1e-10)
    assert result.omega12 == pytest.approx(plasma, rel=1e-10)
    assert result.anharmonicity == pytest.approx(0.0, abs=1e-9)


def test_harmonic_matrix_elements(harmonic):
    elements = drive_matrix_elements(harmonic)
    phi_zpf = (2 * 0.8 / 1.1) ** 0.25
    assert elements[0, 1] == pytest.approx(phi_zpf, rel=1e-10)
    assert elements[1, 2] == pytest.approx(math.sqrt(2) * phi_zpf, rel=1e-10)
    assert coupling_ratio(harmonic) == pytest.approx(math.sqrt(2), rel=1e-10)


def test_flux_operator_is_odd():
    p = device_params(n_basis=40)
    parity = parity_operator(40)
    phi = flux_operator(p)
    assert np.allclose(parity @ phi @ parity, -phi)


def test_half_flux_parity_symmetry():
    p = device_params(n_basis=80)
    parity = parity_operator(80)
    h = build_hamiltonian(p)
    assert np.max(np.abs(parity @ h @ parity - h)) < 1e-9


def test_half_flux_selection_rule():
    elements = drive_matrix_elements(device_params())
    assert elements[0, 2] < 1e-8
    assert elements[0, 1] > 0.0


def test_device_spectrum_is_converged():
    result = spectrum(device_params())
    assert result.n_basis == 120
    assert result.omega01 > 0.0
    assert result.omega12 > result.omega01


def test_drive_current():
    p = device_params()
    one = drive_current(p, 0.1, 0.01)
    assert one > 0.0
    assert drive_current(p, 0.2, 0.01) == pytest.approx(2 * one)
    assert drive_current(p, 0.1, 0.02) == pytest.approx(0.5 * one)
    with pytest.raises(DomainError):
        drive_current(p, 0.1, 0.0)


def test_truncation_converges_monotonically():
    drifts = []
    for n in (40, 60, 80):
        small = eigh(build_hamiltonian(device_params(n_basis=n)), eigvals_only=True, subset_by_index=[0, 1])
        large = eigh(build_hamiltonian(device_params(n_basis=2 * n)), eigvals_only=True,
                     subset_by_index=[0, 1])
        drifts.append(abs((small[1] - small[0]) - (large[1] - large[0])))
    assert drifts[1] <= drifts[0] + 1e-12
    assert drifts[2] <= drifts[1] + 1e-12


def test_parity_symmetry_detection():
    assert is_parity_symmetric(device_params(n_basis=60))
    off = FluxoniumParams(e_c=0.8, e_l=1.1, e_j=5.0, phi_ext=1.3, n_basis=60)
    assert not is_parity_symmetric(off)
    assert spectrum(device_params()).parity_symmetric
