"""
Pulse programs: from a gate target and gate time to sampled lab-frame controls.

The CHRW design inverts the renormalization omega_q J_1(Z) = Omega~_0,
omega_q J_0(Z) - omega = Delta~_q sample by sample, drives the main tone with
Omega_0 = Omega~_0 + (Z/2)(omega + dphi_0/dt) and cancels the Zdot term with a
second tone Omega_1 = Zdot/2 at phase phi_0 - pi/2. The RWA designs drive
Omega_0 = 2 Omega~_0 and put the required detuning on the qubit directly (the
RWA_BS design also pre-compensates the Bloch-Siegert shift).
"""
from __future__ import annotations

import logging
import math
from typing import List, Optional, Tuple

import numpy as np

from app.config import settings
from app.constants import Protocol
from app.errors import DomainError, ValidityError
from app.schemas.pulse import GateTarget, PulseProgram
from app.synthesis.controls import required_controls, solve_z_wq
from app.synthesis.phase import resolve_target
from app.synthesis.schedule import schedule

logger = logging.getLogger(__name__)

MIN_SAMPLES = 2000


def gate_time_index(T: float, omega: float) -> int:
    """k with T = k pi / omega; raises DomainError when T is not such a multiple."""
    k = T * omega / math.pi
    if k < 0.5 or abs(k - round(k)) > 1e-9 * max(1.0, k):
        raise DomainError(f"ERROR: gate time must be k*pi/omega for a positive integer k, got T={T}")
    return int(round(k))


def _fill_phase(phases: List[Optional[float]]) -> np.ndarray:
    """Replace undefined phases by the nearest defined sample, then unwrap."""
    known = [i for i, p in enumerate(phases) if p is not None]
    if not known:
        return np.zeros(len(phases))
    idx = np.asarray(known)
    filled = np.empty(len(phases))
    for i, p in enumerate(phases):
        if p is None:
            j = idx[np.argmin(np.abs(idx - i))]
            filled[i] = phases[j]
        else:
            filled[i] = p
    return np.unwrap(filled)


def required_profile(target: GateTarget, T: float, n_samples: int
                     ) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """(times, Delta~_q, Omega~_0, phi_0) on a uniform grid of n_samples points."""
    times = np.linspace(0.0, T, n_samples)
    delta = np.empty(n_samples)
    amplitude = np.empty(n_samples)
    phases: List[Optional[float]] = []
    for k, t in enumerate(times):
        d, a, p = required_controls(schedule(target, T, float(t)))
        delta[k] = d
        amplitude[k] = a
        phases.append(p)
    return times, delta, amplitude, _fill_phase(phases)


def _check_request(T: float, omega: float, n_samples: int) -> None:
    if omega <= 0:
        raise DomainError(f"ERROR: drive frequency must be positive, got {omega}")
    gate_time_index(T, omega)
    if n_samples < MIN_SAMPLES:
        raise DomainError(f"ERROR: at least {MIN_SAMPLES} samples are required, got {n_samples}")


def synthesize(target: GateTarget, T: float, omega: Optional[float] = None,
               n_samples: Optional[int] = None) -> PulseProgram:
    """CHRW pulse program for a gate target."""
    omega = settings.OMEGA if omega is None else omega
    n_samples = settings.SAMPLES_PER_GATE if n_samples is None else n_samples
    _check_request(T, omega, n_samples)
    target = resolve_target(target)

    times, delta, amplitude, phi0 = required_profile(target, T, n_samples)
    z = np.empty(n_samples)
    omega_q = np.empty(n_samples)
    for k in range(n_samples):
        try:
            z[k], omega_q[k] = solve_z_wq(float(amplitude[k]), float(delta[k]), omega)
        except ValidityError as exc:
            raise ValidityError(f"{exc} (gate {target.name}, T={T:.6g}, t={times[k]:.6g})") from exc

    phi0_dot = np.gradient(phi0, times, edge_order=2)
    z_dot = np.gradient(z, times, edge_order=2)
    omega0 = amplitude + 0.5 * z * (omega + phi0_dot)

    logger.debug(
        f"synthesized {target.name} T={T:.4f}: peak Omega0={omega0.max():.4f}, "
        f"max Z={z.max():.4f}, min omega_q={omega_q.min():.4f}"
    )
    return PulseProgram(
        protocol=Protocol.CHRW,
        omega=omega,
        T=T,
        times=times,
        omega0=omega0,
        omega1=0.5 * z_dot,
        phi0=phi0,
        phi1=phi0 - 0.5 * math.pi,
        omega_q=omega_q,
        z=z,
        delta_eff=delta,
        omega_eff=amplitude,
        target=target,
    )


def synthesize_baseline(target: GateTarget, T: float, protocol: str,
                        omega: Optional[float] = None,
                        n_samples: Optional[int] = None) -> PulseProgram:
    """RWA or RWA_BS pulse program realizing the same target Hamiltonian."""
    if protocol not in (Protocol.RWA, Protocol.RWA_BS):
        raise DomainError(f"ERROR: baseline design needs RWA or RWA_BS, got {protocol!r}")
    omega = settings.OMEGA if omega is None else omega
    n_samples = settings.SAMPLES_PER_GATE if n_samples is None else n_samples
    _check_request(T, omega, n_samples)
    target = resolve_target(target)

    times, delta, amplitude, phi0 = required_profile(target, T, n_samples)
    omega0 = 2.0 * amplitude
    omega_q = omega + delta
    if protocol == Protocol.RWA_BS:
        omega_q = omega_q - omega0 ** 2 / (4.0 * omega)
    if np.any(omega_q <= 0):
        raise ValidityError(
            f"ERROR: {protocol} design for {target.name} at T={T:.6g} needs a non-positive qubit frequency"
        )
    zeros = np.zeros(n_samples)
    return PulseProgram(
        protocol=protocol,
        omega=omega,
        T=T,
        times=times,
        omega0=omega0,
        omega1=zeros,
        phi0=phi0,
        phi1=phi0 - 0.5 * math.pi,
        omega_q=omega_q,
        z=zeros,
        delta_eff=delta,
        omega_eff=amplitude,
        target=target,
    )


def design_program(protocol: str, target: GateTarget, T: float, omega: Optional[float] = None,
                   n_samples: Optional[int] = None) -> PulseProgram:
    """Pulse program of `protocol` for the target."""
    if protocol == Protocol.CHRW:
        return synthesize(target, T, omega, n_samples)
    return synthesize_baseline(target, T, protocol, omega, n_samples)
