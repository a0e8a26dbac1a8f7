"""
Fluxonium circuit model.

    H = 4 E_C Q^2 + (E_L / 2) Phi^2 - E_J cos(Phi + phi_ext)

in the eigenbasis of the harmonic part, Phi = phi_zpf (a + a^dagger) with
phi_zpf = (2 E_C / E_L)^(1/4) and plasma frequency sqrt(8 E_C E_L). Energies
are E / 2pi in GHz throughout.
"""
from __future__ import annotations

import logging
from typing import Optional

import numpy as np
from scipy.constants import h as PLANCK
from scipy.linalg import eigh, expm

from app.constants import FLUX_QUANTUM, FLUXONIUM_DEVICE
from app.errors import ConvergenceError, DomainError
from app.schemas.fluxonium import FluxoniumParams, FluxoniumSpectrum

logger = logging.getLogger(__name__)

CONVERGENCE_TOL = 1e-6


def device_params(n_basis: Optional[int] = None) -> FluxoniumParams:
    e_c, e_l, e_j, phi_ext = FLUXONIUM_DEVICE
    extra = {} if n_basis is None else {"n_basis": n_basis}
    return FluxoniumParams(e_c=e_c, e_l=e_l, e_j=e_j, phi_ext=phi_ext, **extra)


def flux_operator(p: FluxoniumParams) -> np.ndarray:
    """Phi in the truncated oscillator basis (real, tridiagonal)."""
    phi_zpf = (2.0 * p.e_c / p.e_l) ** 0.25
    lowering = np.diag(np.sqrt(np.arange(1, p.n_basis)), k=1)
    return phi_zpf * (lowering + lowering.T)


def build_hamiltonian(p: FluxoniumParams) -> np.ndarray:
    """Circuit Hamiltonian as an (n_basis, n_basis) real symmetric matrix."""
    phi = flux_operator(p)
    harmonic = np.diag(p.plasma_frequency * (np.arange(p.n_basis) + 0.5))
    # For real symmetric Phi, exp(i Phi) = cos(Phi) + i sin(Phi) with both parts real.
    cosine = (np.exp(1j * p.phi_ext) * expm(1j * phi)).real
    return harmonic - p.e_j * cosine


def _eigensystem(p: FluxoniumParams, levels: int = 3):
    return eigh(build_hamiltonian(p), subset_by_index=[0, levels - 1])


def _transitions(p: FluxoniumParams) -> tuple[float, float]:
    energies, _ = _eigensystem(p)
    return float(energies[1] - energies[0]), float(energies[2] - energies[1])


def spectrum(p: FluxoniumParams) -> FluxoniumSpectrum:
    """
    Lowest transitions and flux matrix elements. The truncation is accepted
    when doubling n_basis moves omega01 and omega12 by less than 1e-6 relative.
    """
    w01, w12 = _transitions(p)
    w01_ref, w12_ref = _transitions(p.model_copy(update={"n_basis": 2 * p.n_basis}))
    drift = max(abs(w01 - w01_ref) / abs(w01_ref), abs(w12 - w12_ref) / abs(w12_ref))
    if drift > CONVERGENCE_TOL:
        raise ConvergenceError(
            f"ERROR: fluxonium spectrum not converged at n_basis={p.n_basis} (relative drift {drift:.2e})"
        )
    elements = drive_matrix_elements(p)
    symmetric = is_parity_symmetric(p)
    logger.info(f"fluxonium: omega01={w01:.6f} GHz, omega12={w12:.6f} GHz")
    return FluxoniumSpectrum(
        omega01=w01,
        omega12=w12,
        anharmonicity=w12 - w01,
        phi01=float(elements[0, 1]),
        phi12=float(elements[1, 2]),
        phi02=float(elements[0, 2]),
        parity_symmetric=symmetric,
        n_basis=p.n_basis,
    )


def drive_matrix_elements(p: FluxoniumParams) -> np.ndarray:
    """3x3 array of |<i|Phi|j>| over the lowest three eigenstates."""
    _, vectors = _eigensystem(p)
    return np.abs(vectors.T @ flux_operator(p) @ vectors)


def coupling_ratio(p: FluxoniumParams) -> float:
    """|<1|Phi|2>| / |<0|Phi|1>|, the three-level drive ratio lambda_f of the device."""
    elements = drive_matrix_elements(p)
    if elements[0, 1] == 0:
        raise DomainError("ERROR: <0|Phi|1> vanishes, the qubit transition is not driven")
    return float(elements[1, 2] / elements[0, 1])


def drive_current(p: FluxoniumParams, rabi_ghz: float, mutual_over_inductance: float) -> float:
    """
    Current amplitude (A) of H_D = (M I Phi_0 / L) Phi that gives a qubit-transition
    drive amplitude of rabi_ghz (Omega / 2pi in GHz).
    """
    if mutual_over_inductance <= 0:
        raise DomainError(f"ERROR: M/L must be positive, got {mutual_over_inductance}")
    phi01 = drive_matrix_elements(p)[0, 1]
    return PLANCK * rabi_ghz * 1e9 / (mutual_over_inductance * FLUX_QUANTUM * phi01)


def parity_operator(n_basis: int) -> np.ndarray:
    """Phi -> -Phi reflection in the oscillator basis."""
    return np.diag((-1.0) ** np.arange(n_basis))


def is_parity_symmetric(p: FluxoniumParams, atol: float = 1e-9) -> bool:
    """
    True when H commutes with Phi -> -Phi (phi_ext a multiple of pi). Eigenstates
    then have alternating parity and <0|Phi|2> vanishes.
    """
    h = build_hamiltonian(p)
    parity = parity_operator(p.n_basis)
    symmetric = bool(np.max(np.abs(parity @ h @ parity - h)) <= atol * max(1.0, np.max(np.abs(h))))
    if symmetric:
        _, vectors = _eigensystem(p)
        parities = np.einsum("ni,n,ni->i", vectors, np.diag(parity), vectors)
        logger.debug(f"fluxonium level parities: {np.round(parities, 6).tolist()}")
    return symmetric
