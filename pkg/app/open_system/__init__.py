"""Open-system dynamics: Lindblad evolution and grid-averaged gate fidelities."""
from app.open_system.fidelity import averaged_open_fidelity, input_state_grid
from app.open_system.lindblad import (
    collapse_operators,
    density_matrix,
    evolve_master,
    lindblad_rhs,
    master_trace,
    process_map,
)
from app.open_system.sweeps import decoherence_sweep, gate_time_ns, preset_rates

__all__ = [
    "averaged_open_fidelity",
    "collapse_operators",
    "decoherence_sweep",
    "density_matrix",
    "evolve_master",
    "gate_time_ns",
    "input_state_grid",
    "lindblad_rhs",
    "master_trace",
    "preset_rates",
    "process_map",
]
