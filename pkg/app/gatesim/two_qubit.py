"""
CNOT-like two-qubit gate: the target is driven only when the control is in |g>.

Basis is control (x) target, each in (|e>, |g>) order.
"""
from __future__ import annotations

from typing import Optional

import numpy as np

from app.gatesim.fidelity import sample_times, trace_from_propagators
from app.gatesim.propagation import effective_lab_trace
from app.hamiltonians.lab import lab_hamiltonian
from app.hamiltonians.models import lab_system
from app.numerics.operators import IDENTITY, PROJ_E, PROJ_G
from app.numerics.propagators import propagate_unitary, propagate_unitary_trace
from app.schemas.fidelity import FidelityTrace
from app.schemas.numerics import ToleranceConfig
from app.schemas.pulse import PulseProgram


def controlled(u_target: np.ndarray) -> np.ndarray:
    """|e><e| (x) 1 + |g><g| (x) U."""
    return np.kron(PROJ_E, IDENTITY) + np.kron(PROJ_G, u_target)


def two_qubit_hamiltonian(program: PulseProgram, t: float, system=None) -> np.ndarray:
    """[(1 - sigma_z)/2] (x) H_lab(t)."""
    system = system or lab_system(program)
    return np.kron(PROJ_G, lab_hamiltonian(system, t))


def _generator(program: PulseProgram):
    system = lab_system(program)
    return lambda t: two_qubit_hamiltonian(program, t, system)


def two_qubit_propagator(program: PulseProgram, t: Optional[float] = None) -> np.ndarray:
    t = program.T if t is None else t
    return propagate_unitary(_generator(program), 0.0, t, ToleranceConfig(omega=program.omega), dim=4)


def two_qubit_gate(protocol: str, program: PulseProgram, samples: Optional[int] = None) -> FidelityTrace:
    """F-bar(t) of the exact 4-dimensional evolution against the controlled effective gate."""
    times = sample_times(program.T, samples or 400)
    u_act = propagate_unitary_trace(_generator(program), times,
                                    ToleranceConfig(omega=program.omega), dim=4)
    u_eff = np.array([controlled(u) for u in effective_lab_trace(protocol, program, times)])
    return trace_from_propagators(protocol, times, u_eff, u_act, dim=4)
