"""
Average gate fidelity and its time trace.

F = [Tr(M M^dagger) + |Tr M|^2] / (D^2 + D) with M = P U_eff^dagger U_act P.
"""
from __future__ import annotations

from typing import Optional

import numpy as np
from scipy.integrate import trapezoid

from app.config import settings
from app.errors import DomainError
from app.gatesim.propagation import effective_lab_trace, exact_lab_trace
from app.hamiltonians.frames import rotating_frame
from app.numerics.operators import dagger
from app.schemas.fidelity import FidelityTrace
from app.schemas.pulse import PulseProgram
from app.synthesis.invariant import target_unitary

SUPPORTED_DIMENSIONS = (2, 4)


def gate_fidelity(u_eff: np.ndarray, u_act: np.ndarray, projector: Optional[np.ndarray] = None,
                  dim: Optional[int] = None) -> float:
    """Average gate fidelity of u_act against u_eff on the subspace of `projector`."""
    if u_eff.shape != u_act.shape or u_eff.shape[0] != u_eff.shape[1]:
        raise DomainError(f"ERROR: shape mismatch {u_eff.shape} vs {u_act.shape}")
    if projector is None:
        projector = np.eye(u_eff.shape[0])
    elif projector.shape != u_eff.shape:
        raise DomainError(f"ERROR: projector shape {projector.shape} does not match {u_eff.shape}")
    if np.max(np.abs(projector @ projector - projector)) > 1e-12:
        raise DomainError("ERROR: subspace projector is not idempotent")
    dim = int(round(np.trace(projector).real)) if dim is None else dim
    if dim not in SUPPORTED_DIMENSIONS:
        raise DomainError(f"ERROR: gate dimension must be one of {SUPPORTED_DIMENSIONS}, got {dim}")
    m = projector @ dagger(u_eff) @ u_act @ projector
    return float((np.trace(m @ dagger(m)).real + abs(np.trace(m)) ** 2) / (dim * dim + dim))


def sample_times(T: float, samples: int) -> np.ndarray:
    if samples < 2:
        raise DomainError(f"ERROR: a fidelity trace needs at least 2 samples, got {samples}")
    return np.linspace(0.0, T, samples)


def trace_from_propagators(protocol: str, times: np.ndarray, u_eff: np.ndarray,
                           u_act: np.ndarray, projector: Optional[np.ndarray] = None,
                           dim: Optional[int] = None) -> FidelityTrace:
    fbar = np.array([gate_fidelity(a, b, projector, dim) for a, b in zip(u_eff, u_act)])
    favg = float(trapezoid(fbar, times) / (times[-1] - times[0]))
    return FidelityTrace(protocol=protocol, dimension=dim or u_eff.shape[1], times=times,
                         fbar=fbar, favg=favg)


def fidelity_trace(protocol: str, program: PulseProgram, samples: Optional[int] = None) -> FidelityTrace:
    """F-bar(t) of the exact evolution against the protocol's effective model."""
    times = sample_times(program.T, samples or 400)
    u_act = exact_lab_trace(program, times)
    u_eff = effective_lab_trace(protocol, program, times)
    return trace_from_propagators(protocol, times, u_eff, u_act)


def ideal_lab_gate(program: PulseProgram) -> np.ndarray:
    """Target gate as seen in the lab frame at t = T: R^dagger(T) U_target."""
    if program.target is None:
        raise DomainError("ERROR: program carries no gate target")
    return dagger(rotating_frame(program.omega, program.T)) @ target_unitary(program.target)


def infidelity(u_eff: np.ndarray, u_act: np.ndarray) -> float:
    return 1.0 - gate_fidelity(u_eff, u_act)


def meets_floor(value: float, floor: Optional[float] = None) -> bool:
    return value >= (settings.FIDELITY_FLOOR if floor is None else floor)
