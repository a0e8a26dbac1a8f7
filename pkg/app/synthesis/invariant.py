"""
Lewis-Riesenfeld invariant of the schedule, its eigenstates and the ideal gate.

In the (|e>, |g>) basis the invariant is
    I(t) = Xi0 [[cos b, -i sin b e^{i a}], [i sin b e^{-i a}, -cos b]]
with eigenstates
    |phi_+> = (cos(b/2), i e^{-i a} sin(b/2)),  |phi_-> = (i e^{i a} sin(b/2), cos(b/2)).
These satisfy i dI/dt = [H, I] and <phi_+-|H|phi_+-> = 0 for the Hamiltonian
built by required_controls.
"""
from __future__ import annotations

import cmath
import math
from typing import Callable

import numpy as np
from scipy.integrate import simpson

from app.errors import DomainError
from app.hamiltonians.effective import effective_hamiltonian
from app.hamiltonians.models import protocol_model
from app.schemas.pulse import GateTarget, PulseProgram, ScheduleSample
from app.synthesis.schedule import schedule


def invariant_matrix(s: ScheduleSample, xi0: float = 1.0) -> np.ndarray:
    off = -1j * math.sin(s.beta) * cmath.exp(1j * s.alpha)
    return xi0 * np.array(
        [[math.cos(s.beta), off], [off.conjugate(), -math.cos(s.beta)]], dtype=complex
    )


def eigenstate_plus(alpha: float, beta: float) -> np.ndarray:
    return np.array([math.cos(beta / 2), 1j * cmath.exp(-1j * alpha) * math.sin(beta / 2)])


def eigenstate_minus(alpha: float, beta: float) -> np.ndarray:
    return np.array([1j * cmath.exp(1j * alpha) * math.sin(beta / 2), math.cos(beta / 2)])


def target_unitary(target: GateTarget) -> np.ndarray:
    """sum_k e^{i Theta_k} |phi_k(0)><phi_k(0)| with Theta_- = -Theta_+."""
    plus = eigenstate_plus(target.alpha0, target.beta0)
    minus = eigenstate_minus(target.alpha0, target.beta0)
    return (cmath.exp(1j * target.theta) * np.outer(plus, plus.conj())
            + cmath.exp(-1j * target.theta) * np.outer(minus, minus.conj()))


def _time_derivative(f: Callable[[float], np.ndarray], t: float, lo: float, hi: float,
                     h: float) -> np.ndarray:
    """Second-order finite difference, one-sided within h of either end."""
    if t - h < lo:
        return (-3.0 * f(t) + 4.0 * f(t + h) - f(t + 2 * h)) / (2 * h)
    if t + h > hi:
        return (3.0 * f(t) - 4.0 * f(t - h) + f(t - 2 * h)) / (2 * h)
    return (f(t + h) - f(t - h)) / (2 * h)


def invariant_equation_residual(hamiltonian: Callable[[float], np.ndarray],
                                sample: Callable[[float], ScheduleSample], t: float,
                                lo: float, hi: float, xi0: float = 1.0,
                                h: float = 1e-5) -> float:
    """max |i dI/dt - [H, I]| for a Hamiltonian and schedule given as callables."""
    def inv(time: float) -> np.ndarray:
        return invariant_matrix(sample(time), xi0)

    dI = _time_derivative(inv, t, lo, hi, h)
    H = hamiltonian(t)
    I = inv(t)
    return float(np.max(np.abs(1j * dI - (H @ I - I @ H))))


def _program_parts(program: PulseProgram):
    if program.target is None:
        raise DomainError("ERROR: program carries no gate target")
    model = protocol_model(program.protocol, program)
    target = program.target

    def hamiltonian(t: float) -> np.ndarray:
        return effective_hamiltonian(model, t)

    def sample(t: float) -> ScheduleSample:
        return schedule(target, program.T, min(max(t, 0.0), program.T))

    return hamiltonian, sample


def invariant_residual(program: PulseProgram, t: float) -> float:
    """Invariant-equation residual of the program's own effective Hamiltonian."""
    hamiltonian, sample = _program_parts(program)
    h = 1e-6 * program.T
    return invariant_equation_residual(hamiltonian, sample, t, 0.0, program.T, h=h)


def dynamical_phase(hamiltonian: np.ndarray, s: ScheduleSample) -> float:
    """|<phi_+|H|phi_+>| at one instant."""
    v = eigenstate_plus(s.alpha, s.beta)
    return float(abs(np.vdot(v, hamiltonian @ v)))


def dynamical_phase_residual(program: PulseProgram, t: float) -> float:
    hamiltonian, sample = _program_parts(program)
    return dynamical_phase(hamiltonian(t), sample(t))


def lewis_riesenfeld_phase(program: PulseProgram) -> float:
    """
    R_+(T) = int_0^T <phi_+| i d/dt - H |phi_+> dt on the sample grid, with the
    time derivative of the eigenstate taken numerically.
    """
    hamiltonian, sample = _program_parts(program)
    times = program.times
    vectors = np.array([eigenstate_plus(s.alpha, s.beta) for s in map(sample, times)])
    derivs = np.gradient(vectors, times, axis=0, edge_order=2)
    integrand = np.empty(times.size)
    for k, t in enumerate(times):
        v = vectors[k]
        geometric = (1j * np.vdot(v, derivs[k])).real
        integrand[k] = geometric - np.vdot(v, hamiltonian(t) @ v).real
    return float(simpson(integrand, x=times))
