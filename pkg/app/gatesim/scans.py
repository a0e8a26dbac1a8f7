"""
Gate-time scans: shortest gate time above a fidelity floor, fidelity versus
gate time, and time-averaged infidelity of constant drives.
"""
from __future__ import annotations

import logging
from functools import partial
from typing import Iterable, List, Optional

import numpy as np

from app.config import settings
from app.constants import CONTROLLED_GATE_BASE, VALID_GATES, VALID_PROTOCOLS, Gate
from app.errors import DomainError, ValidityError
from app.gatesim.calibration import constant_drive_program
from app.gatesim.fidelity import fidelity_trace, gate_fidelity
from app.gatesim.propagation import effective_lab_propagator, exact_lab_propagator
from app.gatesim.two_qubit import controlled, two_qubit_propagator
from app.synthesis.phase import preset_target
from app.synthesis.program import design_program
from app.utils.parallel import parallel_map

logger = logging.getLogger(__name__)


def final_fidelity(protocol: str, gate: str, k: int, omega: Optional[float] = None,
                   n_samples: Optional[int] = None) -> float:
    """F-bar(T) at T = k pi / omega for a protocol's own pulse design."""
    if gate not in VALID_GATES:
        raise DomainError(f"ERROR: unknown gate {gate!r}")
    omega = settings.OMEGA if omega is None else omega
    base = CONTROLLED_GATE_BASE.get(gate, gate)
    program = design_program(protocol, preset_target(base), k * np.pi / omega, omega, n_samples)
    u_eff = effective_lab_propagator(protocol, program)
    if gate == Gate.CNOT_LIKE:
        return gate_fidelity(controlled(u_eff), two_qubit_propagator(program))
    return gate_fidelity(u_eff, exact_lab_propagator(program))


def shortest_gate_time(protocol: str, gate: str, fidelity_floor: Optional[float] = None,
                       k_max: Optional[int] = None, omega: Optional[float] = None,
                       n_samples: Optional[int] = None) -> Optional[int]:
    """
    Smallest k with F-bar(k pi / omega) >= fidelity_floor, scanning k upward.
    Gate times whose design is outside the model's validity are skipped.
    Returns None when no k <= k_max qualifies.
    """
    if protocol not in VALID_PROTOCOLS:
        raise DomainError(f"ERROR: unknown protocol {protocol!r}")
    floor = settings.FIDELITY_FLOOR if fidelity_floor is None else fidelity_floor
    k_max = settings.K_MAX if k_max is None else k_max
    for k in range(1, k_max + 1):
        try:
            value = final_fidelity(protocol, gate, k, omega, n_samples)
        except ValidityError as exc:
            logger.info(f"{protocol} {gate} k={k}: skipped ({exc})")
            continue
        logger.info(f"{protocol} {gate} k={k}: F={value:.8f}")
        if value >= floor:
            return k
    logger.warning(f"{protocol} {gate}: no gate time up to {k_max} pi/omega reaches {floor}")
    return None


def _fidelity_row(protocol: str, gate: str, omega: Optional[float], n_samples: Optional[int],
                  k: int) -> dict:
    try:
        value = final_fidelity(protocol, gate, k, omega, n_samples)
    except ValidityError:
        value = float("nan")
    return {"protocol": protocol, "gate": gate, "k": k, "fidelity": value}


def fidelity_vs_gate_time(protocol: str, gate: str, ks: Iterable[int], omega: Optional[float] = None,
                          n_samples: Optional[int] = None, threads: Optional[int] = None) -> List[dict]:
    """F-bar(T) for each k (NaN where the design is invalid)."""
    job = partial(_fidelity_row, protocol, gate, omega, n_samples)
    return parallel_map(job, list(ks), threads)


def _average_row(detuning: float, omega: float, samples: int, item: tuple) -> dict:
    protocol, omega0 = item
    program = constant_drive_program(protocol, omega0, detuning, 100.0 / omega0, omega)
    trace = fidelity_trace(protocol, program, samples)
    return {"protocol": protocol, "omega0": omega0, "infidelity": 1.0 - trace.favg}


def time_averaged_infidelity_scan(omega0_grid: Iterable[float], detuning: float = 0.1,
                                  omega: Optional[float] = None, protocols: Optional[List[str]] = None,
                                  samples: int = 2000, threads: Optional[int] = None) -> List[dict]:
    """1 - F-avg over T = 100/Omega_0 for constant drives of increasing strength."""
    omega = settings.OMEGA if omega is None else omega
    items = [(p, w) for p in (protocols or VALID_PROTOCOLS) for w in omega0_grid]
    return parallel_map(partial(_average_row, detuning, omega, samples), items, threads)
