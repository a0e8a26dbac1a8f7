"""Fluxonium circuit: Hamiltonian, spectrum and drive matrix elements."""
from app.fluxonium.circuit import (
    build_hamiltonian,
    coupling_ratio,
    device_params,
    drive_current,
    drive_matrix_elements,
    spectrum,
)

__all__ = [
    "build_hamiltonian",
    "coupling_ratio",
    "device_params",
    "drive_current",
    "drive_matrix_elements",
    "spectrum",
]
