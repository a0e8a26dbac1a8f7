"""Schemas for fluxonium circuit parameters and spectra."""
import math

from pydantic import BaseModel, field_validator


class FluxoniumParams(BaseModel):
    """Circuit energies E/2pi in GHz, external flux in radians."""
    e_c: float
    e_l: float
    e_j: float
    phi_ext: float = math.pi
    n_basis: int = 120

    class Config:
        frozen = True

    @field_validator("e_c", "e_l")
    @classmethod
    def _positive(cls, v: float) -> float:
        if v <= 0:
            raise ValueError("charging and inductive energies must be positive")
        return v

    @field_validator("e_j")
    @classmethod
    def _junction(cls, v: float) -> float:
        if v < 0:
            raise ValueError("Josephson energy must be non-negative")
        return v

    @field_validator("n_basis")
    @classmethod
    def _basis(cls, v: int) -> int:
        if v < 40:
            raise ValueError("n_basis must be at least 40")
        return v

    @property
    def plasma_frequency(self) -> float:
        return math.sqrt(8.0 * self.e_c * self.e_l)


class FluxoniumSpectrum(BaseModel):
    """Lowest transition frequencies (GHz) and flux matrix elements."""
    omega01: float
    omega12: float
    anharmonicity: float
    phi01: float
    phi12: float
    phi02: float
    parity_symmetric: bool
    n_basis: int
