"""Schemas describing lab-frame systems and effective protocol models."""
from typing import Callable, List, Optional

from pydantic import BaseModel, field_validator

from app.constants import VALID_PROTOCOLS

TimeFunction = Callable[[float], float]


class DriveTone(BaseModel):
    """One term Omega_n(t) cos(omega t + phi_n(t)) sigma_x of the lab drive."""
    index: int
    amplitude: TimeFunction
    phase: TimeFunction

    class Config:
        arbitrary_types_allowed = True
        frozen = True

    @field_validator("index")
    @classmethod
    def _index(cls, v: int) -> int:
        if v not in (0, 1):
            raise ValueError("tone index must be 0 or 1")
        return v


class LabSystem(BaseModel):
    """Driven qubit in the laboratory frame."""
    qubit_frequency: TimeFunction
    drive_frequency: float
    tones: List[DriveTone]

    class Config:
        arbitrary_types_allowed = True
        frozen = True

    @field_validator("drive_frequency")
    @classmethod
    def _positive(cls, v: float) -> float:
        if v <= 0:
            raise ValueError("drive frequency must be positive")
        return v


class ProtocolModel(BaseModel):
    """
    Effective Hamiltonian ingredients of one protocol.

    For RWA and RWA_BS, effective_detuning is Delta_q = omega_q - omega and
    effective_amplitude is Omega_0/2 (secondary_* carry the second tone).
    For CHRW they are the renormalized detuning and amplitude, and z is set.
    """
    kind: str
    drive_frequency: float
    effective_detuning: TimeFunction
    effective_amplitude: TimeFunction
    effective_phase: TimeFunction
    secondary_amplitude: Optional[TimeFunction] = None
    secondary_phase: Optional[TimeFunction] = None
    z: Optional[TimeFunction] = None

    class Config:
        arbitrary_types_allowed = True
        frozen = True

    @field_validator("kind")
    @classmethod
    def _kind(cls, v: str) -> str:
        if v not in VALID_PROTOCOLS:
            raise ValueError(f"unknown protocol {v!r}")
        return v
