"""
Lindblad master equation with relaxation and pure dephasing.

    d rho/dt = -i[H, rho] + gamma D[sigma_-] rho + gamma_phi D[sigma_z] rho
    D[o] rho = o rho o^dagger - (o^dagger o rho + rho o^dagger o) / 2

Two-qubit systems get an independent pair of channels on each qubit. Density
matrices are vectorized row-major, so vec(A rho B) = (A (x) B^T) vec(rho).
"""
from __future__ import annotations

import logging
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
from scipy.integrate import solve_ivp

from app.errors import DomainError, IntegrationError, PositivityError
from app.numerics.operators import IDENTITY, SIGMA_MINUS, SIGMA_Z, dagger, hermiticity_error
from app.schemas.numerics import ToleranceConfig
from app.schemas.open_system import DecoherenceRates

logger = logging.getLogger(__name__)

Hamiltonian = Callable[[float], np.ndarray]

POSITIVITY_FLOOR = -1e-6
TRACE_DRIFT = 1e-8


def collapse_operators(dim: int, rates: DecoherenceRates) -> List[Tuple[float, np.ndarray]]:
    """(rate, operator) pairs for a qubit (dim 2) or a qubit pair (dim 4)."""
    single = [(rates.gamma, SIGMA_MINUS), (rates.gamma_phi, SIGMA_Z)]
    if dim == 2:
        ops = single
    elif dim == 4:
        ops = [(g, np.kron(o, IDENTITY)) for g, o in single]
        ops += [(g, np.kron(IDENTITY, o)) for g, o in single]
    else:
        raise DomainError(f"ERROR: dissipators are defined for dim 2 or 4, got {dim}")
    return [(g, o) for g, o in ops if g > 0]


def dissipator(op: np.ndarray, rho: np.ndarray) -> np.ndarray:
    od = dagger(op)
    n = od @ op
    return op @ rho @ od - 0.5 * (n @ rho + rho @ n)


def lindblad_rhs(rho: np.ndarray, hamiltonian: np.ndarray, rates: DecoherenceRates) -> np.ndarray:
    """Time derivative of rho for a fixed Hamiltonian."""
    rho = np.asarray(rho)
    hamiltonian = np.asarray(hamiltonian)
    if rho.ndim != 2 or rho.shape != hamiltonian.shape or rho.shape[0] != rho.shape[1]:
        raise DomainError(f"ERROR: rho {rho.shape} and H {hamiltonian.shape} must be equal square matrices")
    out = -1j * (hamiltonian @ rho - rho @ hamiltonian)
    for g, op in collapse_operators(rho.shape[0], rates):
        out = out + g * dissipator(op, rho)
    return out


def hamiltonian_superoperator(hamiltonian: np.ndarray) -> np.ndarray:
    d = hamiltonian.shape[0]
    eye = np.eye(d)
    return -1j * (np.kron(hamiltonian, eye) - np.kron(eye, hamiltonian.T))


def dissipator_superoperator(dim: int, rates: DecoherenceRates) -> np.ndarray:
    eye = np.eye(dim)
    out = np.zeros((dim * dim, dim * dim), dtype=complex)
    for g, op in collapse_operators(dim, rates):
        n = dagger(op) @ op
        out += g * (np.kron(op, op.conj()) - 0.5 * np.kron(n, eye) - 0.5 * np.kron(eye, n.T))
    return out


def density_matrix(state: np.ndarray) -> np.ndarray:
    """|psi><psi| of a normalized copy of `state`."""
    psi = np.asarray(state, dtype=complex)
    psi = psi / np.linalg.norm(psi)
    return np.outer(psi, psi.conj())


def check_density_matrix(rho: np.ndarray, label: str = "rho") -> np.ndarray:
    """
    Hermitize rho and verify trace and positivity. Raises PositivityError when
    the lowest eigenvalue falls below POSITIVITY_FLOOR.
    """
    drift = hermiticity_error(rho)
    if drift > 1e-10:
        logger.debug(f"{label}: Hermiticity drift {drift:.3e}, symmetrizing")
    rho = 0.5 * (rho + dagger(rho))
    trace_error = abs(np.trace(rho).real - 1.0)
    if trace_error > TRACE_DRIFT:
        logger.warning(f"{label}: trace drifted by {trace_error:.3e}")
    lowest = float(np.linalg.eigvalsh(rho)[0])
    if lowest < POSITIVITY_FLOOR:
        raise PositivityError(f"ERROR: {label} has eigenvalue {lowest:.3e} below {POSITIVITY_FLOOR:g}")
    return rho


def _integrate(rhs, y0: np.ndarray, t0: float, t1: float, tol: ToleranceConfig,
               t_eval: Optional[np.ndarray], what: str):
    sol = solve_ivp(rhs, (t0, t1), y0, method="DOP853", rtol=tol.rel_tol, atol=tol.abs_tol,
                    max_step=tol.step, t_eval=t_eval)
    if not sol.success:
        raise IntegrationError(f"ERROR: {what} failed on [{t0}, {t1}]: {sol.message}")
    return sol


def master_trace(rho0: np.ndarray, hamiltonian: Hamiltonian, rates: DecoherenceRates,
                 times: Sequence[float], tol: Optional[ToleranceConfig] = None) -> np.ndarray:
    """rho(t_k) for an increasing time grid starting at the initial time."""
    tol = tol or ToleranceConfig()
    times = np.asarray(times, dtype=float)
    rho0 = np.asarray(rho0, dtype=complex)
    d = rho0.shape[0]
    if times.size == 0 or np.any(np.diff(times) < 0):
        raise DomainError("ERROR: master_trace needs a non-empty increasing time grid")
    out = np.empty((times.size, d, d), dtype=complex)
    out[0] = check_density_matrix(rho0, "rho(0)")
    if times.size == 1 or times[-1] == times[0]:
        out[:] = out[0]
        return out
    dissipation = dissipator_superoperator(d, rates)

    def rhs(t, y):
        return (hamiltonian_superoperator(hamiltonian(t)) + dissipation) @ y

    sol = _integrate(rhs, out[0].ravel(), float(times[0]), float(times[-1]), tol, times,
                     "master equation")
    for k in range(1, times.size):
        out[k] = check_density_matrix(sol.y[:, k].reshape(d, d), f"rho(t={times[k]:.4g})")
    return out


def evolve_master(rho0: np.ndarray, hamiltonian: Hamiltonian, rates: DecoherenceRates, T: float,
                  tol: Optional[ToleranceConfig] = None) -> np.ndarray:
    """rho(T) for rho(0) = rho0."""
    if T < 0:
        raise DomainError(f"ERROR: evolution time must be non-negative, got {T}")
    return master_trace(rho0, hamiltonian, rates, [0.0, T], tol)[-1]


def process_map(hamiltonian: Hamiltonian, rates: DecoherenceRates, T: float, dim: int = 2,
                tol: Optional[ToleranceConfig] = None) -> np.ndarray:
    """
    The linear map vec(rho(0)) -> vec(rho(T)) as a (dim^2, dim^2) matrix, from one
    integration of the superoperator equation. Complete positivity is checked on
    the Choi matrix.
    """
    tol = tol or ToleranceConfig()
    n = dim * dim
    dissipation = dissipator_superoperator(dim, rates)

    def rhs(t, y):
        generator = hamiltonian_superoperator(hamiltonian(t)) + dissipation
        return (generator @ y.reshape(n, n)).ravel()

    sol = _integrate(rhs, np.eye(n, dtype=complex).ravel(), 0.0, T, tol, None, "process map")
    superop = sol.y[:, -1].reshape(n, n)

    # Choi matrix sum_ij |i><j| (x) E(|i><j|), normalized to unit trace.
    choi = superop.reshape(dim, dim, dim, dim).transpose(2, 0, 3, 1).reshape(n, n) / dim
    lowest = float(np.linalg.eigvalsh(0.5 * (choi + dagger(choi)))[0])
    if lowest < POSITIVITY_FLOOR:
        raise PositivityError(f"ERROR: process map is not completely positive (eigenvalue {lowest:.3e})")
    trace_rows = superop.reshape(dim, dim, n)[np.arange(dim), np.arange(dim)].sum(axis=0)
    drift = float(np.max(np.abs(trace_rows - np.eye(dim).ravel())))
    if drift > TRACE_DRIFT:
        logger.warning(f"process map: trace preservation error {drift:.3e}")
    return superop


def apply_process_map(superop: np.ndarray, rho: np.ndarray) -> np.ndarray:
    d = rho.shape[-1]
    return (superop @ rho.reshape(-1, d * d).T).T.reshape(rho.shape)
