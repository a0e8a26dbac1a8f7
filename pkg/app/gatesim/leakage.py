"""
Leakage to a second excited level |f>.

Basis (|e>, |g>, |f>) with diagonal (omega_q/2, -omega_q/2, omega2 - omega_q/2),
the ground-referenced ladder (0, omega_q, omega2) shifted by -omega_q/2 so the
qubit block matches the two-level Hamiltonian. The drive couples through
|g><e| + lambda_f |e><f| + h.c.
"""
from __future__ import annotations

import logging
import math
from typing import Iterable, List, Optional

import numpy as np

from app.config import settings
from app.constants import Protocol
from app.errors import DomainError
from app.gatesim.fidelity import gate_fidelity
from app.gatesim.propagation import effective_lab_propagator
from app.hamiltonians.models import lab_system
from app.numerics.operators import embed
from app.numerics.propagators import propagate_unitary
from app.schemas.fidelity import LeakageSystem
from app.schemas.numerics import ToleranceConfig
from app.schemas.pulse import PulseProgram

logger = logging.getLogger(__name__)

QUBIT_PROJECTOR = np.diag([1.0, 1.0, 0.0]).astype(complex)


def _drive_operator(lambda_f: float) -> np.ndarray:
    x = np.zeros((3, 3), dtype=complex)
    x[0, 1] = x[1, 0] = 1.0
    x[0, 2] = x[2, 0] = lambda_f
    return x


def three_level_hamiltonian(program: PulseProgram, leak: LeakageSystem, t: float,
                            system=None) -> np.ndarray:
    system = system or lab_system(program)
    wq = system.qubit_frequency(t)
    omega = system.drive_frequency
    drive = sum(tone.amplitude(t) * math.cos(omega * t + tone.phase(t)) for tone in system.tones)
    diag = np.diag([0.5 * wq, -0.5 * wq, leak.omega2 - 0.5 * wq]).astype(complex)
    return diag + drive * _drive_operator(leak.lambda_f)


def three_level_trace(program: PulseProgram, leak: LeakageSystem,
                      protocol: str = Protocol.CHRW) -> float:
    """Infidelity 1 - F-bar(T) on the qubit subspace with |f> included in the dynamics."""
    if leak.omega2 <= float(np.max(program.omega_q)):
        raise DomainError(f"ERROR: omega2={leak.omega2} must exceed the qubit frequency")
    system = lab_system(program)
    u_act = propagate_unitary(lambda t: three_level_hamiltonian(program, leak, t, system),
                              0.0, program.T, ToleranceConfig(omega=program.omega), dim=3)
    u_eff = embed(effective_lab_propagator(protocol, program), 3)
    return 1.0 - gate_fidelity(u_eff, u_act, QUBIT_PROJECTOR, dim=2)


def leakage_sweep(program: PulseProgram, gaps: Iterable[float], lambda_f: Optional[float] = None,
                  protocol: str = Protocol.CHRW) -> List[dict]:
    """Infidelity versus omega2 - omega_q(0) (units of omega)."""
    lam = settings.LAMBDA_F if lambda_f is None else lambda_f
    rows = []
    for gap in gaps:
        leak = LeakageSystem(omega2=float(program.omega_q[0]) + gap, lambda_f=lam)
        value = three_level_trace(program, leak, protocol)
        logger.info(f"leakage gap={gap:.3f}: infidelity {value:.3e}")
        rows.append({"gap": gap, "lambda_f": lam, "infidelity": value})
    return rows
