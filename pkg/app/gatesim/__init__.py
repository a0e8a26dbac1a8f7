"""Gate simulation: propagators, fidelities, scans, two-qubit and leakage models."""
from app.gatesim.calibration import calibrate_constant_drive, constant_drive_program, population_comparison
from app.gatesim.fidelity import fidelity_trace, gate_fidelity, ideal_lab_gate
from app.gatesim.leakage import leakage_sweep, three_level_hamiltonian, three_level_trace
from app.gatesim.propagation import (
    chrw_s_frame_propagator,
    effective_lab_propagator,
    effective_lab_trace,
    exact_lab_propagator,
    exact_lab_trace,
)
from app.gatesim.scans import (
    fidelity_vs_gate_time,
    final_fidelity,
    shortest_gate_time,
    time_averaged_infidelity_scan,
)
from app.gatesim.two_qubit import two_qubit_gate, two_qubit_hamiltonian

__all__ = [
    "calibrate_constant_drive",
    "chrw_s_frame_propagator",
    "constant_drive_program",
    "effective_lab_propagator",
    "effective_lab_trace",
    "exact_lab_propagator",
    "exact_lab_trace",
    "fidelity_trace",
    "fidelity_vs_gate_time",
    "final_fidelity",
    "gate_fidelity",
    "ideal_lab_gate",
    "leakage_sweep",
    "population_comparison",
    "shortest_gate_time",
    "three_level_hamiltonian",
    "three_level_trace",
    "time_averaged_infidelity_scan",
    "two_qubit_gate",
    "two_qubit_hamiltonian",
]
