"""Invariant-based inverse engineering of geometric gates."""
from app.synthesis.controls import required_controls, solve_z_wq
from app.synthesis.invariant import (
    dynamical_phase_residual,
    invariant_matrix,
    invariant_residual,
    lewis_riesenfeld_phase,
    target_unitary,
)
from app.synthesis.phase import geometric_phase, preset_target, resolve_target, solve_lambda
from app.synthesis.program import design_program, synthesize, synthesize_baseline
from app.synthesis.schedule import schedule

__all__ = [
    "design_program",
    "dynamical_phase_residual",
    "geometric_phase",
    "invariant_matrix",
    "invariant_residual",
    "lewis_riesenfeld_phase",
    "preset_target",
    "required_controls",
    "resolve_target",
    "schedule",
    "solve_lambda",
    "solve_z_wq",
    "synthesize",
    "synthesize_baseline",
    "target_unitary",
]
