"""Schema for control-noise specifications."""
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, field_validator, model_validator

from app.constants import MAX_NOISE_RATE, VALID_NOISE_KINDS, VALID_NOISE_TARGETS, NoiseKind


class NoiseSpec(BaseModel):
    """
    Systematic noise scales every targeted waveform by (1 + rate).
    Stochastic noise draws `segments` piecewise-constant offsets uniformly in
    [-rate, rate] per target from a generator seeded with `seed`.
    """
    kind: str
    rate: float
    targets: List[str]
    segments: int = 100
    seed: Optional[int] = None

    class Config:
        frozen = True

    @field_validator("kind")
    @classmethod
    def _kind(cls, v: str) -> str:
        if v not in VALID_NOISE_KINDS:
            raise ValueError(f"unknown noise kind {v!r}")
        return v

    @field_validator("targets")
    @classmethod
    def _targets(cls, v: List[str]) -> List[str]:
        if not v:
            raise ValueError("at least one noise target is required")
        unknown = [x for x in v if x not in VALID_NOISE_TARGETS]
        if unknown:
            raise ValueError(f"unknown noise targets {unknown}")
        return sorted(set(v))

    @model_validator(mode="after")
    def _rate_and_fields(self) -> "NoiseSpec":
        if abs(self.rate) > MAX_NOISE_RATE:
            raise ValueError(f"noise rate must satisfy |delta| <= {MAX_NOISE_RATE}, got {self.rate}")
        if self.kind == NoiseKind.STOCHASTIC:
            if self.rate < 0:
                raise ValueError("stochastic noise amplitude must be non-negative")
            if self.segments < 1:
                raise ValueError("segments must be positive")
            if self.seed is None:
                raise ValueError("stochastic noise requires a seed")
        return self

    def metadata(self) -> Dict[str, Any]:
        """Flat description written into output headers."""
        data: Dict[str, Any] = {"noise_kind": self.kind, "noise_rate": self.rate,
                                "noise_targets": "+".join(self.targets)}
        if self.kind == NoiseKind.STOCHASTIC:
            data["noise_segments"] = self.segments
            data["noise_seed"] = self.seed
        return data
