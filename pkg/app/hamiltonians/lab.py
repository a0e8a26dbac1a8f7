"""
Laboratory-frame Hamiltonian of the two-tone driven qubit.
"""
from __future__ import annotations

import math
from typing import Iterable

import numpy as np

from app.errors import DomainError
from app.numerics.operators import SIGMA_X, SIGMA_Z
from app.schemas.hamiltonian import DriveTone, LabSystem


def lab_hamiltonian(system: LabSystem, t: float) -> np.ndarray:
    """(omega_q/2) sigma_z + sum_n Omega_n(t) cos(omega t + phi_n(t)) sigma_x."""
    omega = system.drive_frequency
    drive = 0.0
    for tone in system.tones:
        drive += tone.amplitude(t) * math.cos(omega * t + tone.phase(t))
    return 0.5 * system.qubit_frequency(t) * SIGMA_Z + drive * SIGMA_X


def bs_shift(tones: Iterable[DriveTone], omega: float, t: float) -> float:
    """Bloch-Siegert coefficient of sigma_z: sum_n Omega_n(t)^2 / (8 omega)."""
    if omega <= 0:
        raise DomainError(f"ERROR: drive frequency must be positive, got {omega}")
    return sum(tone.amplitude(t) ** 2 for tone in tones) / (8.0 * omega)
