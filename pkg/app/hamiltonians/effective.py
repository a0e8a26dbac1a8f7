"""
Effective Hamiltonians of the three protocols, in the frame rotating at omega.
"""
from __future__ import annotations

import logging
import math
import warnings

import numpy as np

from app.constants import Z_MAX, Protocol
from app.errors import ChrwValidityWarning, DomainError
from app.numerics.bessel import bessel_j
from app.numerics.operators import SIGMA_Z, transverse
from app.schemas.hamiltonian import ProtocolModel

logger = logging.getLogger(__name__)


def _require(model: ProtocolModel, *kinds: str) -> None:
    if model.kind not in kinds:
        raise DomainError(f"ERROR: expected a {'/'.join(kinds)} model, got {model.kind}")


def rwa_hamiltonian(model: ProtocolModel, t: float) -> np.ndarray:
    """(Delta_q/2) sigma_z + sum_n (Omega_n/2)(e^{i phi_n} sigma_- + h.c.)."""
    _require(model, Protocol.RWA, Protocol.RWA_BS)
    h = 0.5 * model.effective_detuning(t) * SIGMA_Z
    h = h + model.effective_amplitude(t) * transverse(model.effective_phase(t))
    if model.secondary_amplitude is not None:
        h = h + model.secondary_amplitude(t) * transverse(model.secondary_phase(t))
    return h


def model_bs_shift(model: ProtocolModel, t: float) -> float:
    """Bloch-Siegert coefficient from the model's half-amplitudes Omega_n/2."""
    total = (2.0 * model.effective_amplitude(t)) ** 2
    if model.secondary_amplitude is not None:
        total += (2.0 * model.secondary_amplitude(t)) ** 2
    return total / (8.0 * model.drive_frequency)


def rwa_bs_hamiltonian(model: ProtocolModel, t: float) -> np.ndarray:
    """RWA Hamiltonian plus the Bloch-Siegert sigma_z shift."""
    _require(model, Protocol.RWA, Protocol.RWA_BS)
    return rwa_hamiltonian(model, t) + model_bs_shift(model, t) * SIGMA_Z


def chrw_hamiltonian(model: ProtocolModel, t: float) -> np.ndarray:
    """(Delta~_q/2) sigma_z + Omega~_0 (e^{i phi_0} sigma_- + h.c.)."""
    _require(model, Protocol.CHRW)
    if model.z is not None:
        zt = model.z(t)
        if zt < 0.0 or zt > Z_MAX:
            message = f"CHRW model evaluated at Z={zt:.4f} outside [0, {Z_MAX}] (t={t:.4f})"
            logger.warning(message)
            warnings.warn(message, ChrwValidityWarning, stacklevel=2)
    return (0.5 * model.effective_detuning(t) * SIGMA_Z
            + model.effective_amplitude(t) * transverse(model.effective_phase(t)))


def chrw_frame_hamiltonian(model: ProtocolModel, t: float) -> np.ndarray:
    """
    H'_0 + H'_1 in the S frame (no rotating frame): the CHRW Hamiltonian
    rotated back by R(t), with the rotating-frame generator restored.
    """
    _require(model, Protocol.CHRW)
    omega = model.drive_frequency
    tau = omega * t + model.effective_phase(t)
    return (0.5 * (model.effective_detuning(t) + omega) * SIGMA_Z
            + model.effective_amplitude(t) * transverse(tau))


def effective_hamiltonian(model: ProtocolModel, t: float) -> np.ndarray:
    """Dispatch on the model kind."""
    if model.kind == Protocol.CHRW:
        return chrw_hamiltonian(model, t)
    if model.kind == Protocol.RWA_BS:
        return rwa_bs_hamiltonian(model, t)
    return rwa_hamiltonian(model, t)


def speed_limit_bound(m_max: int = 12, z: float = 1.0) -> dict[str, float]:
    """
    Upper bounds on the effective driving strength: the CHRW bound
    min_m 4 J_1(Z) m omega / J_2m(Z) on Omega~_0, the RWA bound 2 omega on
    Omega_0/2, and their ratio (bounds in units of omega).
    """
    if m_max < 1:
        raise DomainError(f"ERROR: m_max must be at least 1, got {m_max}")
    j1 = bessel_j(1, z)
    chrw = min(4.0 * j1 * m / bessel_j(2 * m, z) for m in range(1, m_max + 1))
    rwa = 2.0
    return {"chrw": chrw, "rwa": rwa, "ratio": chrw / rwa}
