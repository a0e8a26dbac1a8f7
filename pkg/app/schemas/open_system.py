"""Schemas for decoherence rates and input-state grids."""
import math

import numpy as np
from pydantic import BaseModel, field_validator


class DecoherenceRates(BaseModel):
    """Relaxation and pure-dephasing rates in units of the drive frequency."""
    gamma: float = 0.0
    gamma_phi: float = 0.0

    class Config:
        frozen = True

    @field_validator("gamma", "gamma_phi")
    @classmethod
    def _non_negative(cls, v: float) -> float:
        if v < 0:
            raise ValueError("decoherence rates must be non-negative")
        return v

    @classmethod
    def from_physical(cls, gamma_hz: float, gamma_phi_hz: float, omega_hz: float) -> "DecoherenceRates":
        """Convert rates given as gamma/2pi in Hz, for a drive at omega/2pi = omega_hz."""
        return cls(gamma=gamma_hz / omega_hz, gamma_phi=gamma_phi_hz / omega_hz)


class InputStateGrid(BaseModel):
    """States cos(theta)|g> + sin(theta) e^{i phi}|e> on a regular (theta, phi) grid."""
    n_theta: int
    n_phi: int

    class Config:
        frozen = True

    @field_validator("n_theta", "n_phi")
    @classmethod
    def _positive(cls, v: int) -> int:
        if v < 1:
            raise ValueError("grid sizes must be positive")
        return v

    @property
    def size(self) -> int:
        return self.n_theta * self.n_phi

    def angles(self) -> list[tuple[float, float]]:
        thetas = [2 * math.pi * k / self.n_theta for k in range(self.n_theta)]
        phis = [2 * math.pi * k / self.n_phi for k in range(self.n_phi)]
        return [(th, ph) for th in thetas for ph in phis]

    def states(self) -> np.ndarray:
        """Array of shape (size, 2) in the (|e>, |g>) basis."""
        out = np.empty((self.size, 2), dtype=complex)
        for i, (th, ph) in enumerate(self.angles()):
            out[i] = (math.sin(th) * np.exp(1j * ph), math.cos(th))
        return out
