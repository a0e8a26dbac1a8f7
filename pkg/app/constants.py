"""
app/constants.py

Protocol tags, gate presets and reference values for the geometric-gate engine.

- Protocol names are stable string tags used in configs, CSV columns and logs.
- Gate presets carry the schedule parameters (alpha0, beta0, geometric phase) and
  the tuned Lambda of each single-qubit gate.
- Reference gate times and experimental rate presets are used by the
  reproduction scenarios and by the acceptance tests.
"""

from __future__ import annotations

import math
from typing import Final

from scipy.constants import physical_constants


# ============================================================================
# Protocols
# ============================================================================

class Protocol:
    """Effective models a pulse can be designed for and scored against."""
    CHRW = "CHRW"
    RWA = "RWA"
    RWA_BS = "RWA_BS"


VALID_PROTOCOLS: Final[list[str]] = [
    Protocol.CHRW,
    Protocol.RWA_BS,
    Protocol.RWA,
]

PROTOCOL_LABELS: Final[dict[str, str]] = {
    Protocol.CHRW: "CHRW",
    Protocol.RWA: "RWA",
    Protocol.RWA_BS: "RWA-BS",
}


# ============================================================================
# Gate presets
# ============================================================================

class Gate:
    """Names of the gates the engine knows how to build."""
    NOT = "NOT"
    HADAMARD = "Hadamard"
    PHASE_PI = "Phase-pi"
    CNOT_LIKE = "CNOT-like"


SINGLE_QUBIT_GATES: Final[list[str]] = [Gate.NOT, Gate.HADAMARD, Gate.PHASE_PI]
VALID_GATES: Final[list[str]] = SINGLE_QUBIT_GATES + [Gate.CNOT_LIKE]

# (alpha0, beta0, geometric phase Theta_+, Lambda)
GATE_PRESETS: Final[dict[str, tuple[float, float, float, float]]] = {
    Gate.NOT: (math.pi / 2, math.pi / 2, 3 * math.pi / 2, 0.8089),
    Gate.HADAMARD: (math.pi / 2, math.pi / 4, math.pi / 2, 0.3867),
    Gate.PHASE_PI: (0.0, 0.0, math.pi / 2, 1.4669),
}

# The two-qubit gate drives the target with the NOT pulse.
CONTROLLED_GATE_BASE: Final[dict[str, str]] = {Gate.CNOT_LIKE: Gate.NOT}

# Search interval for Lambda.
LAMBDA_BRACKET: Final[tuple[float, float]] = (0.0, 2.0)


# ============================================================================
# Reference shortest gate times (units of pi/omega, fidelity floor 0.9999)
# ============================================================================

REFERENCE_GATE_TIMES: Final[dict[str, dict[str, int]]] = {
    Gate.NOT: {Protocol.CHRW: 5, Protocol.RWA_BS: 8, Protocol.RWA: 34},
    Gate.HADAMARD: {Protocol.CHRW: 6, Protocol.RWA_BS: 10, Protocol.RWA: 27},
    Gate.PHASE_PI: {Protocol.CHRW: 6, Protocol.RWA_BS: 10, Protocol.RWA: 48},
    Gate.CNOT_LIKE: {Protocol.CHRW: 5, Protocol.RWA_BS: 8, Protocol.RWA: 25},
}


# ============================================================================
# CHRW validity
# ============================================================================

Z_MAX: Final[float] = 1.2
BESSEL_MAX_ORDER: Final[int] = 64
BESSEL_MAX_ARG: Final[float] = 50.0


# ============================================================================
# Physical units and experimental rates (all rates are gamma / 2pi in Hz)
# ============================================================================

class RatePreset:
    """Decoherence presets: (relaxation, dephasing) as gamma / 2pi in Hz."""
    DEFAULT = "default"
    FLUXONIUM_DEVICE = "fluxonium_device"


RATE_PRESETS: Final[dict[str, tuple[float, float]]] = {
    RatePreset.DEFAULT: (25e3, 25e3),
    RatePreset.FLUXONIUM_DEVICE: (0.6e3, 1.1e3),
}

# Sweep used for the decoherence scenario (gamma / 2pi in Hz, gamma_phi = gamma).
DECOHERENCE_SWEEP_HZ: Final[list[float]] = [5e3, 10e3, 25e3, 50e3, 100e3]

# Reference fluxonium device: (E_C, E_L, E_J) / 2pi in GHz and external flux.
FLUXONIUM_DEVICE: Final[tuple[float, float, float, float]] = (0.8, 1.1, 5.0, math.pi)

# Magnetic flux quantum h / 2e in Wb.
FLUX_QUANTUM: Final[float] = physical_constants["mag. flux quantum"][0]


# ============================================================================
# Output
# ============================================================================

CSV_SIGNIFICANT_DIGITS: Final[int] = 12
REPRODUCTION_TARGETS: Final[list[str]] = [
    "table1", "table2", "fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fluxonium",
]


# ============================================================================
# Noise
# ============================================================================

class NoiseKind:
    SYSTEMATIC = "systematic"
    STOCHASTIC = "stochastic"


class NoiseTarget:
    """Control parameters a noise model can act on."""
    OMEGA0 = "Omega0"
    OMEGA1 = "Omega1"
    DELTA = "Delta"  # scales omega_q - omega
    PHI0 = "phi0"
    PHI1 = "phi1"
    TIME = "T"  # stretches the time axis


# Largest admissible |delta| (systematic) or peak epsilon (stochastic).
MAX_NOISE_RATE: Final[float] = 0.5

VALID_NOISE_KINDS: Final[list[str]] = [NoiseKind.SYSTEMATIC, NoiseKind.STOCHASTIC]
VALID_NOISE_TARGETS: Final[list[str]] = [
    NoiseTarget.OMEGA0,
    NoiseTarget.OMEGA1,
    NoiseTarget.DELTA,
    NoiseTarget.PHI0,
    NoiseTarget.PHI1,
    NoiseTarget.TIME,
]

# Noise strengths swept by the robustness scenario.
NOISE_SWEEP_GRID: Final[list[float]] = [-0.1, -0.05, 0.0, 0.05, 0.1]
STOCHASTIC_SWEEP_GRID: Final[list[float]] = [0.0, 0.025, 0.05, 0.075, 0.1]
