"""
Exact and effective lab-frame propagators of a pulse program.

The exact propagator integrates the lab Hamiltonian. Effective propagators
integrate the protocol's rotating-frame Hamiltonian and map back:
    RWA, RWA_BS:  U_lab(t) = R^dagger(t) U_rot(t)
    CHRW:         U_lab(t) = S^dagger(t) R^dagger(t) U_rot(t) S(0)
"""
from __future__ import annotations

from typing import Optional, Sequence

import numpy as np

from app.constants import Protocol
from app.hamiltonians.effective import chrw_frame_hamiltonian, effective_hamiltonian
from app.hamiltonians.frames import generator_s, rotating_frame
from app.hamiltonians.lab import lab_hamiltonian
from app.hamiltonians.models import lab_system, protocol_model
from app.numerics.operators import dagger
from app.numerics.propagators import propagate_unitary, propagate_unitary_trace
from app.schemas.hamiltonian import ProtocolModel
from app.schemas.numerics import ToleranceConfig
from app.schemas.pulse import PulseProgram


def _lab_generator(program: PulseProgram):
    system = lab_system(program)

    def hamiltonian(t: float) -> np.ndarray:
        return lab_hamiltonian(system, t)

    return hamiltonian


def exact_lab_propagator(program: PulseProgram, t: Optional[float] = None,
                         tol: Optional[ToleranceConfig] = None) -> np.ndarray:
    """U(t, 0) of the full lab Hamiltonian (t defaults to the gate time)."""
    t = program.T if t is None else t
    return propagate_unitary(_lab_generator(program), 0.0, t, tol or ToleranceConfig(omega=program.omega))


def exact_lab_trace(program: PulseProgram, times: Sequence[float],
                    tol: Optional[ToleranceConfig] = None) -> np.ndarray:
    return propagate_unitary_trace(_lab_generator(program), times,
                                   tol or ToleranceConfig(omega=program.omega))


def _frame_map(model: ProtocolModel, t: float, u_rot: np.ndarray, s0: np.ndarray) -> np.ndarray:
    r_dag = dagger(rotating_frame(model.drive_frequency, t))
    if model.kind != Protocol.CHRW:
        return r_dag @ u_rot
    tau = model.drive_frequency * t + model.effective_phase(t)
    s_dag = dagger(generator_s(model.z(t), tau))
    return s_dag @ r_dag @ u_rot @ s0


def _initial_s(model: ProtocolModel) -> np.ndarray:
    if model.kind != Protocol.CHRW:
        return np.eye(2, dtype=complex)
    return generator_s(model.z(0.0), model.effective_phase(0.0))


def _resolve_model(model, program: PulseProgram) -> ProtocolModel:
    if isinstance(model, ProtocolModel):
        return model
    return protocol_model(model, program)


def effective_lab_propagator(model, program: PulseProgram, t: Optional[float] = None,
                             tol: Optional[ToleranceConfig] = None) -> np.ndarray:
    """Lab-frame propagator predicted by an effective model (or a protocol name)."""
    model = _resolve_model(model, program)
    t = program.T if t is None else t
    u_rot = propagate_unitary(lambda s: effective_hamiltonian(model, s), 0.0, t,
                              tol or ToleranceConfig(omega=program.omega))
    return _frame_map(model, t, u_rot, _initial_s(model))


def effective_lab_trace(model, program: PulseProgram, times: Sequence[float],
                        tol: Optional[ToleranceConfig] = None) -> np.ndarray:
    model = _resolve_model(model, program)
    u_rot = propagate_unitary_trace(lambda s: effective_hamiltonian(model, s), times,
                                    tol or ToleranceConfig(omega=program.omega))
    s0 = _initial_s(model)
    return np.array([_frame_map(model, float(t), u, s0) for t, u in zip(times, u_rot)])


def chrw_s_frame_propagator(program: PulseProgram, t: Optional[float] = None,
                            tol: Optional[ToleranceConfig] = None) -> np.ndarray:
    """
    CHRW lab propagator obtained without the rotating frame: integrate
    H'_0 + H'_1 in the S frame and undo S.
    """
    model = protocol_model(Protocol.CHRW, program)
    t = program.T if t is None else t
    u = propagate_unitary(lambda s: chrw_frame_hamiltonian(model, s), 0.0, t,
                          tol or ToleranceConfig(omega=program.omega))
    tau = program.omega * t + model.effective_phase(t)
    return dagger(generator_s(model.z(t), tau)) @ u @ _initial_s(model)
