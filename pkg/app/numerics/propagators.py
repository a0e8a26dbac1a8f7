"""
Unitary propagation of time-dependent Hamiltonians.

Solves i dU/dt = H(t) U with scipy's adaptive 8th-order Runge-Kutta (DOP853)
on the flattened matrix. Propagators whose unitarity drift exceeds
settings.UNITARITY_DRIFT are re-projected onto the unitary group (polar
factor); each projection is logged at DEBUG level.
"""
from __future__ import annotations

import logging
from typing import Callable, Optional, Sequence

import numpy as np
from scipy.integrate import solve_ivp

from app.config import settings
from app.errors import DomainError, IntegrationError
from app.numerics.operators import nearest_unitary, unitarity_error
from app.schemas.numerics import ToleranceConfig

logger = logging.getLogger(__name__)

Hamiltonian = Callable[[float], np.ndarray]


def _project(u: np.ndarray, label: str) -> np.ndarray:
    drift = unitarity_error(u)
    if drift > settings.UNITARITY_DRIFT:
        logger.debug(f"{label}: unitarity drift {drift:.3e}, re-projecting")
        return nearest_unitary(u)
    return u


def _solve(hamiltonian: Hamiltonian, t0: float, t1: float, u0: np.ndarray,
           tol: ToleranceConfig, t_eval: Optional[np.ndarray]):
    d = u0.shape[0]

    def rhs(t, y):
        return (-1j * (hamiltonian(t) @ y.reshape(d, d))).ravel()

    sol = solve_ivp(
        rhs,
        (t0, t1),
        u0.astype(complex).ravel(),
        method="DOP853",
        rtol=tol.rel_tol,
        atol=tol.abs_tol,
        max_step=tol.step,
        t_eval=t_eval,
    )
    if not sol.success:
        raise IntegrationError(f"ERROR: unitary propagation failed on [{t0}, {t1}]: {sol.message}")
    return sol


def propagate_unitary(hamiltonian: Hamiltonian, t0: float, t1: float,
                      tol: Optional[ToleranceConfig] = None,
                      u0: Optional[np.ndarray] = None, dim: int = 2) -> np.ndarray:
    """U(t1, t0), or U(t1, t0) @ u0 when an initial matrix is given."""
    tol = tol or ToleranceConfig()
    if t1 < t0:
        raise DomainError(f"ERROR: propagation runs forward only, got t0={t0} > t1={t1}")
    start = np.eye(dim, dtype=complex) if u0 is None else np.asarray(u0, dtype=complex)
    if t1 == t0:
        return start.copy()
    sol = _solve(hamiltonian, t0, t1, start, tol, None)
    d = start.shape[0]
    return _project(sol.y[:, -1].reshape(d, d), "propagate_unitary")


def propagate_unitary_trace(hamiltonian: Hamiltonian, times: Sequence[float],
                            tol: Optional[ToleranceConfig] = None, dim: int = 2) -> np.ndarray:
    """
    U(t_k, t_0) for every t_k in an increasing time grid, from a single
    integration with dense output. Returns an array of shape (len(times), dim, dim).
    """
    tol = tol or ToleranceConfig()
    times = np.asarray(times, dtype=float)
    start = np.eye(dim, dtype=complex)
    out = np.empty((times.size, dim, dim), dtype=complex)
    out[0] = start
    if times.size == 1:
        return out
    sol = _solve(hamiltonian, float(times[0]), float(times[-1]), start, tol, times)
    for k in range(times.size):
        out[k] = _project(sol.y[:, k].reshape(dim, dim), "propagate_unitary_trace")
    return out
