"""Schema for one experiment run as described by a config file or CLI flags."""
from typing import List, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from app.config import settings
from app.constants import (
    MAX_NOISE_RATE,
    RATE_PRESETS,
    REPRODUCTION_TARGETS,
    VALID_GATES,
    VALID_NOISE_KINDS,
    VALID_NOISE_TARGETS,
    VALID_PROTOCOLS,
    NOISE_SWEEP_GRID,
    Gate,
    NoiseKind,
    NoiseTarget,
)

SUBCOMMANDS = ["synthesize", "simulate", "sweep", "noise", "lindblad", "leakage", "fluxonium"]
SCENARIOS = SUBCOMMANDS + [t for t in REPRODUCTION_TARGETS if t not in SUBCOMMANDS]

UNIT_MODES = ["dimensionless", "physical"]

# Spellings accepted for gate names besides the canonical ones.
GATE_ALIASES = {
    "PhasePi": Gate.PHASE_PI,
    "Phase": Gate.PHASE_PI,
    "CNOTlike": Gate.CNOT_LIKE,
    "CNOT": Gate.CNOT_LIKE,
}


class NoiseConfig(BaseModel):
    kind: str = NoiseKind.SYSTEMATIC
    targets: List[str] = Field(default_factory=lambda: [NoiseTarget.OMEGA0, NoiseTarget.DELTA])
    rates: List[float] = Field(default_factory=lambda: list(NOISE_SWEEP_GRID))
    trials: int = settings.NOISE_TRIALS
    segments: int = settings.NOISE_SEGMENTS

    class Config:
        frozen = True

    @field_validator("kind")
    @classmethod
    def _kind(cls, v: str) -> str:
        if v not in VALID_NOISE_KINDS:
            raise ValueError(f"noise kind must be one of {VALID_NOISE_KINDS}")
        return v

    @field_validator("targets")
    @classmethod
    def _targets(cls, v: List[str]) -> List[str]:
        unknown = [t for t in v if t not in VALID_NOISE_TARGETS]
        if unknown or not v:
            raise ValueError(f"noise targets must be a non-empty subset of {VALID_NOISE_TARGETS}")
        return v

    @field_validator("rates")
    @classmethod
    def _rates(cls, v: List[float]) -> List[float]:
        too_large = [r for r in v if abs(r) > MAX_NOISE_RATE]
        if too_large:
            raise ValueError(f"noise rates must satisfy |delta| <= {MAX_NOISE_RATE}, got {too_large}")
        return v

    @field_validator("trials", "segments")
    @classmethod
    def _count(cls, v: int) -> int:
        if v < 1:
            raise ValueError("trials and segments must be at least 1")
        return v


class RatesConfig(BaseModel):
    """Decoherence rates as gamma / 2pi in Hz, from a preset or explicit grids."""
    preset: Optional[str] = None
    gamma_hz: List[float] = Field(default_factory=list)
    gamma_phi_hz: List[float] = Field(default_factory=list)
    full_grid: bool = False

    class Config:
        frozen = True

    @field_validator("preset")
    @classmethod
    def _preset(cls, v: Optional[str]) -> Optional[str]:
        if v is not None and v not in RATE_PRESETS:
            raise ValueError(f"rate preset must be one of {sorted(RATE_PRESETS)}")
        return v

    @model_validator(mode="after")
    def _grids(self) -> "RatesConfig":
        if any(g < 0 for g in self.gamma_hz + self.gamma_phi_hz):
            raise ValueError("decoherence rates must be non-negative")
        if self.gamma_phi_hz and len(self.gamma_phi_hz) != len(self.gamma_hz):
            raise ValueError("gamma_phi_hz must match gamma_hz in length")
        return self


class LeakageConfig(BaseModel):
    gaps: List[float] = Field(default_factory=lambda: [2.0, 4.0, 6.0, 8.0, 10.0, 15.0, 20.0])
    lambda_f: float = settings.LAMBDA_F

    class Config:
        frozen = True

    @field_validator("gaps")
    @classmethod
    def _gaps(cls, v: List[float]) -> List[float]:
        if not v or any(g <= 0 for g in v):
            raise ValueError("leakage gaps must be positive")
        return v


class ExperimentConfig(BaseModel):
    """
    One run: a scenario id plus the gate, protocols and gate times (k in
    T = k pi / omega) it acts on. Sections default to the values of Settings.
    """
    scenario: str
    gate: str = Gate.HADAMARD
    protocols: List[str] = Field(default_factory=lambda: list(VALID_PROTOCOLS))
    gate_times: List[float] = Field(default_factory=list)
    units: str = "dimensionless"
    output: str = settings.OUTPUT_DIR
    seed: int = settings.DEFAULT_SEED
    samples: Optional[int] = None
    threads: Optional[int] = None
    noise: NoiseConfig = Field(default_factory=NoiseConfig)
    rates: RatesConfig = Field(default_factory=RatesConfig)
    leakage: LeakageConfig = Field(default_factory=LeakageConfig)

    class Config:
        frozen = True

    @field_validator("scenario")
    @classmethod
    def _scenario(cls, v: str) -> str:
        if v not in SCENARIOS:
            raise ValueError(f"scenario must be one of {SCENARIOS}")
        return v

    @field_validator("gate")
    @classmethod
    def _gate(cls, v: str) -> str:
        if not v.strip():
            raise ValueError("gate name must not be empty")
        v = GATE_ALIASES.get(v, v)
        if v not in VALID_GATES:
            raise ValueError(f"gate must be one of {VALID_GATES}")
        return v

    @field_validator("protocols")
    @classmethod
    def _protocols(cls, v: List[str]) -> List[str]:
        v = [p.replace("-", "_") for p in v]
        if not v or any(p not in VALID_PROTOCOLS for p in v):
            raise ValueError(f"protocols must be a non-empty subset of {VALID_PROTOCOLS}")
        return v

    @field_validator("gate_times")
    @classmethod
    def _gate_times(cls, v: List[float]) -> List[float]:
        if any(k <= 0 or abs(k - round(k)) > 1e-9 for k in v):
            raise ValueError("gate times must be positive integers k in T = k pi / omega")
        return [float(round(k)) for k in v]

    @field_validator("units")
    @classmethod
    def _units(cls, v: str) -> str:
        if v not in UNIT_MODES:
            raise ValueError(f"units must be one of {UNIT_MODES}")
        return v

    @field_validator("seed")
    @classmethod
    def _seed(cls, v: int) -> int:
        if not 0 <= v < 2 ** 64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        return v

    @field_validator("samples", "threads")
    @classmethod
    def _optional_count(cls, v: Optional[int]) -> Optional[int]:
        if v is not None and v < 1:
            raise ValueError("samples and threads must be positive")
        return v
