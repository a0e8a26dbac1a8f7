"""Lab-frame Hamiltonian, effective protocol models and frame generators."""
from app.hamiltonians.effective import (
    chrw_frame_hamiltonian,
    chrw_hamiltonian,
    effective_hamiltonian,
    rwa_bs_hamiltonian,
    rwa_hamiltonian,
    speed_limit_bound,
)
from app.hamiltonians.frames import generator_s, rotating_frame, transformed_terms
from app.hamiltonians.lab import bs_shift, lab_hamiltonian
from app.hamiltonians.models import lab_system, protocol_model

__all__ = [
    "bs_shift",
    "chrw_frame_hamiltonian",
    "chrw_hamiltonian",
    "effective_hamiltonian",
    "generator_s",
    "lab_hamiltonian",
    "lab_system",
    "protocol_model",
    "rotating_frame",
    "rwa_bs_hamiltonian",
    "rwa_hamiltonian",
    "speed_limit_bound",
    "transformed_terms",
]
