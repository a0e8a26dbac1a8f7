"""
Input-state-averaged gate fidelity under decoherence.

Each grid state |psi_in> is evolved by the master equation with the exact lab
Hamiltonian and scored by <psi_out| rho(T) |psi_out>, psi_out = U |psi_in>
with U the ideal lab-frame gate. The master equation is linear in rho, so it is
integrated once as a process map and the map is applied to the whole grid.
"""
from __future__ import annotations

import logging
from typing import Optional

import numpy as np

from app.config import settings
from app.errors import DomainError
from app.gatesim.fidelity import ideal_lab_gate
from app.gatesim.two_qubit import controlled, two_qubit_hamiltonian
from app.hamiltonians.lab import lab_hamiltonian
from app.hamiltonians.models import lab_system
from app.open_system.lindblad import apply_process_map, process_map
from app.schemas.numerics import ToleranceConfig
from app.schemas.open_system import DecoherenceRates, InputStateGrid
from app.schemas.pulse import PulseProgram

logger = logging.getLogger(__name__)


def input_state_grid(n_theta: int, n_phi: int) -> np.ndarray:
    """cos(theta)|g> + sin(theta) e^{i phi}|e> for theta, phi on [0, 2pi) progressions."""
    if n_theta < 1 or n_phi < 1:
        raise DomainError(f"ERROR: grid counts must be positive, got ({n_theta}, {n_phi})")
    return InputStateGrid(n_theta=n_theta, n_phi=n_phi).states()


def default_grid(full: bool = False) -> InputStateGrid:
    if full:
        return InputStateGrid(n_theta=settings.FULL_GRID_N, n_phi=settings.FULL_GRID_N)
    return InputStateGrid(n_theta=settings.GRID_N_THETA, n_phi=settings.GRID_N_PHI)


def product_states(states: np.ndarray) -> np.ndarray:
    """All control (x) target products of a single-qubit state list."""
    return np.einsum("ia,jb->ijab", states, states).reshape(-1, states.shape[1] ** 2)


def state_fidelities(superop: np.ndarray, target: np.ndarray, states: np.ndarray) -> np.ndarray:
    """<psi_out| E(|psi_in><psi_in|) |psi_out> for every row of `states`."""
    rho_in = np.einsum("na,nb->nab", states, states.conj())
    rho_out = apply_process_map(superop, rho_in)
    psi_out = states @ target.T
    return np.einsum("na,nab,nb->n", psi_out.conj(), rho_out, psi_out).real


def averaged_open_fidelity(program: PulseProgram, rates: DecoherenceRates,
                           grid: Optional[InputStateGrid] = None, two_qubit: bool = False,
                           tol: Optional[ToleranceConfig] = None) -> float:
    """
    Mean output fidelity over the input grid. The two-qubit variant drives the
    CNOT-like Hamiltonian and averages over product states of a per-qubit
    TWO_QUBIT_GRID_N x TWO_QUBIT_GRID_N sub-grid.
    """
    tol = tol or ToleranceConfig(omega=program.omega)
    system = lab_system(program)
    gate = ideal_lab_gate(program)
    if two_qubit:
        n = settings.TWO_QUBIT_GRID_N
        grid = grid or InputStateGrid(n_theta=n, n_phi=n)
        states = product_states(grid.states())
        target = controlled(gate)
        superop = process_map(lambda t: two_qubit_hamiltonian(program, t, system), rates,
                              program.T, dim=4, tol=tol)
    else:
        grid = grid or default_grid()
        states = grid.states()
        target = gate
        superop = process_map(lambda t: lab_hamiltonian(system, t), rates, program.T, dim=2, tol=tol)
    values = state_fidelities(superop, target, states)
    mean = float(np.mean(values))
    logger.debug(f"averaged_open_fidelity over {len(values)} states: {mean:.10f}")
    return mean
