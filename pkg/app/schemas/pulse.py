"""Schemas for gate targets, schedule samples and pulse programs."""
from typing import Optional

import numpy as np
from pydantic import BaseModel, field_validator, model_validator

from app.constants import VALID_PROTOCOLS, Z_MAX, Protocol
from app.utils.arrays import readonly_array


class GateTarget(BaseModel):
    """A single-qubit gate: schedule origin (alpha0, beta0), geometric phase and Lambda."""
    name: str
    alpha0: float
    beta0: float
    theta: float
    lam: Optional[float] = None

    class Config:
        frozen = True

    @field_validator("name")
    @classmethod
    def _name_not_empty(cls, v: str) -> str:
        if not v.strip():
            raise ValueError("gate name must not be empty")
        return v

    @field_validator("theta")
    @classmethod
    def _theta_branch(cls, v: float) -> float:
        if not -2 * np.pi < v < 2 * np.pi:
            raise ValueError(f"theta must lie in (-2pi, 2pi), got {v}")
        return v

    @field_validator("lam")
    @classmethod
    def _lambda_range(cls, v: Optional[float]) -> Optional[float]:
        if v is not None and not 0.0 <= v <= 2.0:
            raise ValueError(f"lambda must lie in [0, 2], got {v}")
        return v

    @field_validator("beta0")
    @classmethod
    def _beta0_range(cls, v: float) -> float:
        if not 0.0 <= v <= np.pi:
            raise ValueError(f"beta0 must lie in [0, pi], got {v}")
        return v


class ScheduleSample(BaseModel):
    """Schedule angles and their time derivatives at one instant."""
    t: float
    alpha: float
    beta: float
    alpha_dot: float
    beta_dot: float

    class Config:
        frozen = True


WAVEFORM_FIELDS = (
    "omega0", "omega1", "phi0", "phi1", "omega_q", "z", "delta_eff", "omega_eff",
)


class PulseProgram(BaseModel):
    """
    Sampled lab-frame controls of one gate plus the effective-model quantities
    they were designed to realize.

    delta_eff and omega_eff hold the detuning and amplitude the designed
    protocol's effective Hamiltonian sees (tilde quantities for CHRW, Delta_q and
    Omega_0/2 for the RWA designs). Arrays are read-only copies.
    """
    protocol: str
    omega: float
    T: float
    times: np.ndarray
    omega0: np.ndarray
    omega1: np.ndarray
    phi0: np.ndarray
    phi1: np.ndarray
    omega_q: np.ndarray
    z: np.ndarray
    delta_eff: np.ndarray
    omega_eff: np.ndarray
    target: Optional[GateTarget] = None

    class Config:
        arbitrary_types_allowed = True
        frozen = True

    @field_validator("times", *WAVEFORM_FIELDS, mode="before")
    @classmethod
    def _to_readonly(cls, v):
        return readonly_array(v)

    @field_validator("protocol")
    @classmethod
    def _known_protocol(cls, v: str) -> str:
        if v not in VALID_PROTOCOLS:
            raise ValueError(f"unknown protocol {v!r}")
        return v

    @model_validator(mode="after")
    def _consistent(self) -> "PulseProgram":
        n = self.times.shape[0]
        if n < 2:
            raise ValueError("a pulse program needs at least two samples")
        for name in WAVEFORM_FIELDS:
            if getattr(self, name).shape != (n,):
                raise ValueError(f"waveform {name} has shape {getattr(self, name).shape}, expected ({n},)")
        if np.any(np.diff(self.times) <= 0):
            raise ValueError("sample times must be strictly increasing")
        if abs(self.times[0]) > 1e-12 or abs(self.times[-1] - self.T) > 1e-9 * max(1.0, self.T):
            raise ValueError("sample times must span [0, T]")
        if np.any(self.omega_q <= 0):
            raise ValueError("qubit frequency must stay positive")
        if self.protocol == Protocol.CHRW and (np.any(self.z < -1e-12) or np.any(self.z > Z_MAX + 1e-9)):
            raise ValueError(f"Z must stay within [0, {Z_MAX}] for a CHRW program")
        return self

    @property
    def n_samples(self) -> int:
        return int(self.times.shape[0])

    def waveform(self, name: str, t: float) -> float:
        """Linear interpolation of one sampled waveform at time t."""
        return float(np.interp(t, self.times, getattr(self, name)))

    def replace(self, **updates) -> "PulseProgram":
        """New validated program with some fields swapped out."""
        data = {name: getattr(self, name) for name in type(self).model_fields}
        data.update(updates)
        return type(self)(**data)
