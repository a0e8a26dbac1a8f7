"""Schema for integrator tolerances."""
import math
from typing import Optional

from pydantic import BaseModel, model_validator

from app.config import settings


class ToleranceConfig(BaseModel):
    """Adaptive-step tolerances. max_step defaults to 2pi / (50 omega)."""
    abs_tol: float = settings.ABS_TOL
    rel_tol: float = settings.REL_TOL
    max_step: Optional[float] = None
    omega: float = settings.OMEGA

    class Config:
        frozen = True

    @model_validator(mode="after")
    def _check(self) -> "ToleranceConfig":
        if not 0 < self.abs_tol <= 1e-10:
            raise ValueError(f"abs_tol must lie in (0, 1e-10], got {self.abs_tol}")
        if not 0 < self.rel_tol <= 1e-8:
            raise ValueError(f"rel_tol must lie in (0, 1e-8], got {self.rel_tol}")
        ceiling = 2 * math.pi / (settings.MAX_STEP_PER_PERIOD * self.omega)
        if self.max_step is not None and not 0 < self.max_step <= ceiling * (1 + 1e-12):
            raise ValueError(f"max_step must lie in (0, {ceiling:.6g}]")
        return self

    @property
    def step(self) -> float:
        if self.max_step is not None:
            return self.max_step
        return 2 * math.pi / (settings.MAX_STEP_PER_PERIOD * self.omega)
