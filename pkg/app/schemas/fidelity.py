"""Schemas for fidelity traces and leakage systems."""
import numpy as np
from pydantic import BaseModel, field_validator

from app.utils.arrays import readonly_array


class FidelityTrace(BaseModel):
    """Average gate fidelity sampled over [0, T] and its time average."""
    protocol: str
    dimension: int
    times: np.ndarray
    fbar: np.ndarray
    favg: float

    class Config:
        arbitrary_types_allowed = True
        frozen = True

    @field_validator("times", "fbar", mode="before")
    @classmethod
    def _to_readonly(cls, v):
        return readonly_array(v)

    @property
    def final(self) -> float:
        """F-bar at the gate time."""
        return float(self.fbar[-1])


class LeakageSystem(BaseModel):
    """Second excited level |f> at omega2 coupled with ratio lambda_f."""
    omega2: float
    lambda_f: float

    class Config:
        frozen = True

    @field_validator("lambda_f")
    @classmethod
    def _non_negative(cls, v: float) -> float:
        if v < 0:
            raise ValueError("lambda_f must be non-negative")
        return v
