"""Tests for the frame generators and the transformed Hamiltonian."""
import math

import numpy as np
import pytest

from app.errors import DomainError
from app.hamiltonians.frames import generator_s, rotating_frame, transformed_terms
from app.hamiltonians.lab import lab_hamiltonian
from app.numerics.operators import IDENTITY, unitarity_error
from app.schemas.hamiltonian import DriveTone, LabSystem


def _transformed_numerically(system, z, t, h=1e-6):
    """S H S^dagger + i (dS/dt) S^dagger by central differences."""
    tone0 = next(tone for tone in system.tones if tone.index == 0)

    def s_at(time):
        return generator_s(z(time), system.drive_frequency * time + tone0.phase(time))

    s = s_at(t)
    s_dot = (s_at(t + h) - s_at(t - h)) / (2 * h)
    return s @ lab_hamiltonian(system, t) @ s.conj().T + 1j * s_dot @ s.conj().T


def test_generators_are_unitary():
    for z, tau in [(0.0, 0.3), (0.8, 1.1), (1.2, -2.0)]:
        assert unitarity_error(generator_s(z, tau)) < 1e-15
    assert np.array_equal(generator_s(0.0, 1.0), IDENTITY)
    assert np.allclose(rotating_frame(1.0, 0.0), IDENTITY)
    assert unitarity_error(rotating_frame(1.0, 2.3)) < 1e-15


def test_constant_z_frame_expansion():
    z = 0.6
    system = LabSystem(
        qubit_frequency=lambda t: 1.05,
        drive_frequency=1.0,
        tones=[DriveTone(index=0, amplitude=lambda t: 0.35, phase=lambda t: 0.2)],
    )
    for t in (0.0, 0.9, 2.7, 5.1):
        h0, h1, h2 = transformed_terms(system, lambda s: z, 12, t)
        assert np.max(np.abs(h0 + h1 + h2 - _transformed_numerically(system, lambda s: z, t))) < 1e-6


def test_two_tone_frame_expansion():
    """A second tone with Omega_1 = Zdot/2 at phase phi_0 - pi/2 cancels the Zdot term."""
    rate = 0.02

    def z(t):
        return 0.4 + rate * t

    def phi0(t):
        return 0.1 + 0.05 * t

    system = LabSystem(
        qubit_frequency=lambda t: 0.97 + 0.01 * t,
        drive_frequency=1.0,
        tones=[
            DriveTone(index=0, amplitude=lambda t: 0.3 + 0.01 * math.sin(t), phase=phi0),
            DriveTone(index=1, amplitude=lambda t: 0.5 * rate, phase=lambda t: phi0(t) - 0.5 * math.pi),
        ],
    )
    for t in (0.5, 3.3, 7.0):
        h0, h1, h2 = transformed_terms(system, z, 12, t)
        assert np.max(np.abs(h0 + h1 + h2 - _transformed_numerically(system, z, t))) < 1e-6


def test_transformed_terms_need_primary_tone():
    system = LabSystem(
        qubit_frequency=lambda t: 1.0,
        drive_frequency=1.0,
        tones=[DriveTone(index=1, amplitude=lambda t: 0.1, phase=lambda t: 0.0)],
    )
    with pytest.raises(DomainError):
        transformed_terms(system, lambda t: 0.1, 12, 0.0)
    with pytest.raises(DomainError):
        transformed_terms(system, lambda t: 0.1, 0, 0.0)
