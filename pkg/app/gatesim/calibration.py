"""
Constant-drive working points: calibration of (Z, omega_q) for a fixed lab
amplitude, constant-drive programs and population comparisons.
"""
from __future__ import annotations

import logging
import math
from typing import Optional, Sequence, Tuple

import numpy as np

from app.config import settings
from app.constants import Protocol
from app.errors import ConvergenceError, DomainError
from app.gatesim.propagation import effective_lab_trace, exact_lab_trace
from app.numerics.bessel import bessel_j
from app.schemas.pulse import PulseProgram
from app.synthesis.controls import solve_z_wq

logger = logging.getLogger(__name__)

MAX_ITERATIONS = 100


def calibrate_constant_drive(omega0_lab: float, delta_target: float, omega: float,
                             phi0: float = 0.0) -> Tuple[float, float]:
    """
    (Z, omega_q) such that a constant drive Omega_0 yields the renormalized
    detuning delta_target, i.e. omega_q J_1(Z) = Omega_0 - Z omega / 2 and
    omega_q J_0(Z) - omega = delta_target.

    Damped fixed-point iteration over solve_z_wq; phi0 is constant so its
    derivative does not enter.
    """
    z = 0.0
    for iteration in range(1, MAX_ITERATIONS + 1):
        z_new, omega_q = solve_z_wq(omega0_lab - 0.5 * z * omega, delta_target, omega)
        if abs(z_new - z) <= 1e-15:
            residual = abs(omega_q * bessel_j(1, z_new) - (omega0_lab - 0.5 * z_new * omega))
            logger.debug(f"calibrated Z={z_new:.12f} omega_q={omega_q:.12f} "
                         f"after {iteration} iterations (residual {residual:.2e})")
            return z_new, omega_q
        z = 0.5 * (z + z_new)
    raise ConvergenceError(
        f"ERROR: constant-drive calibration did not converge in {MAX_ITERATIONS} iterations "
        f"(Omega0={omega0_lab}, Delta~={delta_target}, phi0={phi0})"
    )


def constant_drive_program(protocol: str, omega0: float, detuning: float, T: float,
                           omega: Optional[float] = None, phi0: float = 0.0,
                           n_samples: int = 2000) -> PulseProgram:
    """
    Single-tone constant drive of amplitude omega0 whose effective detuning is
    `detuning` under the given protocol (CHRW calibrates omega_q; RWA and RWA_BS
    put the detuning on the qubit directly).
    """
    omega = settings.OMEGA if omega is None else omega
    if T <= 0:
        raise DomainError(f"ERROR: duration must be positive, got {T}")
    ones = np.ones(n_samples)
    if protocol == Protocol.CHRW:
        z, omega_q = calibrate_constant_drive(omega0, detuning, omega, phi0)
        delta_eff, omega_eff = detuning, omega_q * bessel_j(1, z)
    elif protocol in (Protocol.RWA, Protocol.RWA_BS):
        z, omega_q = 0.0, omega + detuning
        delta_eff, omega_eff = detuning, 0.5 * omega0
        if protocol == Protocol.RWA_BS:
            delta_eff = detuning + omega0 ** 2 / (4.0 * omega)
    else:
        raise DomainError(f"ERROR: unknown protocol {protocol!r}")
    return PulseProgram(
        protocol=protocol,
        omega=omega,
        T=T,
        times=np.linspace(0.0, T, n_samples),
        omega0=omega0 * ones,
        omega1=0.0 * ones,
        phi0=phi0 * ones,
        phi1=(phi0 - 0.5 * math.pi) * ones,
        omega_q=omega_q * ones,
        z=z * ones,
        delta_eff=delta_eff * ones,
        omega_eff=omega_eff * ones,
    )


def population_comparison(protocol: str, program: PulseProgram, times: Sequence[float],
                          initial: Optional[np.ndarray] = None) -> Tuple[np.ndarray, np.ndarray]:
    """Ground-state populations (exact, effective) in the lab frame, starting from |g>."""
    psi0 = np.array([0.0, 1.0], dtype=complex) if initial is None else np.asarray(initial, dtype=complex)
    times = np.asarray(times, dtype=float)
    exact = exact_lab_trace(program, times) @ psi0
    effective = effective_lab_trace(protocol, program, times) @ psi0
    return np.abs(exact[:, 1]) ** 2, np.abs(effective[:, 1]) ** 2
