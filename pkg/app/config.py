"""
Engine configuration using Pydantic Settings.

Loads environment variables (or a local .env file) and provides a global
configuration instance. All quantities are dimensionless, in units of the
reference drive frequency omega, unless the name says otherwise.
"""
import math
from typing import Optional

from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Engine configuration from environment variables"""

    OMEGA: float = 1.0

    # Integrator
    ABS_TOL: float = 1e-12
    REL_TOL: float = 1e-10
    MAX_STEP_PER_PERIOD: int = 50
    UNITARITY_DRIFT: float = 1e-10

    # Pulse synthesis
    SAMPLES_PER_GATE: int = 4000
    M_MAX: int = 12

    # Gate-time scans
    FIDELITY_FLOOR: float = 0.9999
    K_MAX: int = 60

    # Noise sweeps
    NOISE_GATE_K: int = 16
    NOISE_SEGMENTS: int = 100
    NOISE_TRIALS: int = 200

    # Open-system input grids
    GRID_N_THETA: int = 20
    GRID_N_PHI: int = 20
    FULL_GRID_N: int = 100
    TWO_QUBIT_GRID_N: int = 10

    # Physical mode (omega / 2pi in Hz)
    PHYSICAL_OMEGA_HZ: float = 5e9

    # Three-level leakage
    LAMBDA_F: float = math.sqrt(2.0)

    # Fluxonium
    FLUXONIUM_N_BASIS: int = 120

    # Runs
    OUTPUT_DIR: str = "out"
    LOG_LEVEL: str = "INFO"
    THREADS: int = 1
    DEFAULT_SEED: int = 20240521
    CONFIG_PATH: Optional[str] = None

    class Config:
        env_file = ".env"
        env_file_encoding = "utf-8"
        case_sensitive = True

    @property
    def max_step(self) -> float:
        """Largest integrator step: a fixed fraction of one drive period."""
        return 2.0 * math.pi / (self.MAX_STEP_PER_PERIOD * self.OMEGA)


settings = Settings()
