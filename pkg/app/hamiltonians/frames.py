"""
Frame generators and the Bessel decomposition of the transformed Hamiltonian.

S(t) = exp[i (Z/2) sin(tau) sigma_x] with tau = omega t + phi_0(t) removes the
counter-rotating dynamics to first order; R(t) = exp(i omega t sigma_z / 2) is
the rotating frame.
"""
from __future__ import annotations

import math
from typing import Callable, Tuple

import numpy as np

from app.errors import DomainError
from app.numerics.bessel import bessel_j_orders
from app.numerics.operators import IDENTITY, SIGMA_X, SIGMA_Y, SIGMA_Z
from app.schemas.hamiltonian import LabSystem


def generator_s(z: float, tau: float) -> np.ndarray:
    """cos(Z sin(tau)/2) 1 + i sin(Z sin(tau)/2) sigma_x."""
    angle = 0.5 * z * math.sin(tau)
    return math.cos(angle) * IDENTITY + 1j * math.sin(angle) * SIGMA_X


def rotating_frame(omega: float, t: float) -> np.ndarray:
    """diag(e^{i omega t/2}, e^{-i omega t/2})."""
    phase = 0.5 * omega * t
    return np.diag([np.exp(1j * phase), np.exp(-1j * phase)])


def central_difference(f: Callable[[float], float], t: float, h: float = 1e-6) -> float:
    return (f(t + h) - f(t - h)) / (2.0 * h)


def transformed_terms(system: LabSystem, z: Callable[[float], float], m_max: int, t: float,
                      h: float = 1e-6) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    (H'_0, H'_1, H'_2) of S H S^dagger - i S dS^dagger/dt.

    Assumes the second tone already cancels the Zdot term (Omega_1 = Zdot/2,
    phi_1 = phi_0 - pi/2). H'_2 keeps the harmonics m = 1..m_max.
    """
    if m_max < 1:
        raise DomainError(f"ERROR: m_max must be at least 1, got {m_max}")
    tone0 = next((tone for tone in system.tones if tone.index == 0), None)
    if tone0 is None:
        raise DomainError("ERROR: transformed_terms needs the primary tone (index 0)")
    omega = system.drive_frequency
    wq = system.qubit_frequency(t)
    zt = z(t)
    phi0 = tone0.phase(t)
    phi0_dot = central_difference(tone0.phase, t, h)
    tau = omega * t + phi0

    j = bessel_j_orders(2 * m_max + 1, zt)
    omega_tilde = tone0.amplitude(t) - 0.5 * zt * (omega + phi0_dot)

    h0 = 0.5 * wq * j[0] * SIGMA_Z
    h1 = omega_tilde * math.cos(tau) * SIGMA_X + wq * j[1] * math.sin(tau) * SIGMA_Y
    h2 = np.zeros((2, 2), dtype=complex)
    for m in range(1, m_max + 1):
        h2 += wq * j[2 * m + 1] * math.sin((2 * m + 1) * tau) * SIGMA_Y
        h2 += wq * j[2 * m] * math.cos(2 * m * tau) * SIGMA_Z
    return h0, h1, h2
