"""
Pauli operators and small matrix helpers.

Basis ordering is (|e>, |g>): sigma_z = diag(1, -1) and sigma_minus = |g><e|.
"""
from __future__ import annotations

import numpy as np
from scipy.linalg import polar

IDENTITY = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
SIGMA_MINUS = np.array([[0, 0], [1, 0]], dtype=complex)
SIGMA_PLUS = SIGMA_MINUS.T.copy()

# Projectors onto |e> and |g>.
PROJ_E = np.diag([1.0, 0.0]).astype(complex)
PROJ_G = np.diag([0.0, 1.0]).astype(complex)

for _op in (IDENTITY, SIGMA_X, SIGMA_Y, SIGMA_Z, SIGMA_MINUS, SIGMA_PLUS, PROJ_E, PROJ_G):
    _op.setflags(write=False)


def dagger(a: np.ndarray) -> np.ndarray:
    return a.conj().T


def transverse(phi: float) -> np.ndarray:
    """e^{i phi} sigma_minus + h.c. = cos(phi) sigma_x + sin(phi) sigma_y."""
    return np.array([[0, np.exp(-1j * phi)], [np.exp(1j * phi), 0]], dtype=complex)


def hermiticity_error(h: np.ndarray) -> float:
    return float(np.max(np.abs(h - dagger(h))))


def unitarity_error(u: np.ndarray) -> float:
    """Max-norm of U^dagger U - 1."""
    return float(np.max(np.abs(dagger(u) @ u - np.eye(u.shape[0]))))


def nearest_unitary(u: np.ndarray) -> np.ndarray:
    """Unitary factor of the polar decomposition."""
    w, _ = polar(u)
    return w


def embed(block: np.ndarray, dim: int) -> np.ndarray:
    """Place a square block in the upper-left corner of a dim x dim identity."""
    out = np.eye(dim, dtype=complex)
    k = block.shape[0]
    out[:k, :k] = block
    return out
