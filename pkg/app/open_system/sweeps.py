"""
Decoherence sweeps in physical units: mean infidelity versus gamma / 2pi.
"""
from __future__ import annotations

import logging
import math
from functools import partial
from typing import Dict, Iterable, List, Optional

from app.config import settings
from app.constants import CONTROLLED_GATE_BASE, RATE_PRESETS, REFERENCE_GATE_TIMES, VALID_PROTOCOLS, Gate
from app.errors import DomainError
from app.open_system.fidelity import averaged_open_fidelity, default_grid
from app.schemas.open_system import DecoherenceRates, InputStateGrid
from app.synthesis.phase import preset_target
from app.synthesis.program import design_program
from app.utils.parallel import parallel_map

logger = logging.getLogger(__name__)


def preset_rates(name: str, omega_hz: Optional[float] = None) -> DecoherenceRates:
    """Named experimental (gamma, gamma_phi) pair in units of omega."""
    if name not in RATE_PRESETS:
        raise DomainError(f"ERROR: unknown rate preset {name!r}; choose from {sorted(RATE_PRESETS)}")
    gamma_hz, gamma_phi_hz = RATE_PRESETS[name]
    return DecoherenceRates.from_physical(gamma_hz, gamma_phi_hz, omega_hz or settings.PHYSICAL_OMEGA_HZ)


def gate_time_ns(k: float, omega_hz: Optional[float] = None) -> float:
    """Duration of T = k pi / omega in nanoseconds for a drive at omega / 2pi = omega_hz."""
    omega_hz = omega_hz or settings.PHYSICAL_OMEGA_HZ
    return k * math.pi / (2 * math.pi * omega_hz) * 1e9


def _sweep_point(gate: str, grid: Optional[InputStateGrid], omega_hz: float, n_samples: Optional[int],
                 item: tuple) -> dict:
    protocol, k, gamma_hz, gamma_phi_hz = item
    omega = settings.OMEGA
    base = CONTROLLED_GATE_BASE.get(gate, gate)
    program = design_program(protocol, preset_target(base), k * math.pi / omega, omega, n_samples)
    rates = DecoherenceRates.from_physical(gamma_hz, gamma_phi_hz, omega_hz)
    two_qubit = gate == Gate.CNOT_LIKE
    fidelity = averaged_open_fidelity(program, rates, grid, two_qubit=two_qubit)
    if two_qubit:
        n_states = (grid.size if grid else settings.TWO_QUBIT_GRID_N ** 2) ** 2
    else:
        n_states = grid.size if grid else default_grid().size
    logger.info(f"{protocol} {gate} k={k} gamma/2pi={gamma_hz:.4g} Hz: infidelity {1 - fidelity:.3e}")
    return {
        "gamma_over_2pi_Hz": gamma_hz,
        "gamma_phi_over_2pi_Hz": gamma_phi_hz,
        "protocol": protocol,
        "gate": gate,
        "k": k,
        "gate_time_ns": gate_time_ns(k, omega_hz),
        "mean_infidelity": 1.0 - fidelity,
        "n_states": n_states,
    }


def decoherence_sweep(gate: str, gammas_hz: Iterable[float], protocols: Optional[List[str]] = None,
                      gate_times: Optional[Dict[str, int]] = None,
                      gamma_phi_hz: Optional[Iterable[float]] = None,
                      grid: Optional[InputStateGrid] = None, omega_hz: Optional[float] = None,
                      n_samples: Optional[int] = None, threads: Optional[int] = None) -> List[dict]:
    """
    Mean infidelity for each protocol at its own gate time (k pi / omega, by
    default its shortest high-fidelity time) as the decoherence rates grow.
    gamma_phi defaults to gamma at every point.
    """
    if gate not in REFERENCE_GATE_TIMES:
        raise DomainError(f"ERROR: unknown gate {gate!r}")
    protocols = protocols or VALID_PROTOCOLS
    gate_times = gate_times or REFERENCE_GATE_TIMES[gate]
    omega_hz = omega_hz or settings.PHYSICAL_OMEGA_HZ
    gammas = list(gammas_hz)
    dephasing = gammas if gamma_phi_hz is None else list(gamma_phi_hz)
    if len(dephasing) != len(gammas):
        raise DomainError("ERROR: gamma and gamma_phi grids must have the same length")
    items = [(p, gate_times[p], g, gp) for p in protocols for g, gp in zip(gammas, dephasing)]
    return parallel_map(partial(_sweep_point, gate, grid, omega_hz, n_samples), items, threads)
