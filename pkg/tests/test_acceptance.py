"""Reproduction-level checks against the published reference values (run with -m slow)."""
import math

import numpy as np
import pytest

from app.constants import REFERENCE_GATE_TIMES, Gate, NoiseKind, NoiseTarget, Protocol
from app.fluxonium.circuit import device_params, spectrum
from app.gatesim.calibration import constant_drive_program, population_comparison
from app.gatesim.leakage import leakage_sweep
from app.gatesim.scans import final_fidelity, shortest_gate_time, time_averaged_infidelity_scan
from app.noise.sweeps import robustness_sweep
from app.open_system.sweeps import decoherence_sweep
from app.synthesis.phase import preset_target
from app.synthesis.program import synthesize

pytestmark = pytest.mark.slow

TABLE_CASES = [
    (gate, protocol)
    for gate in (Gate.NOT, Gate.HADAMARD, Gate.PHASE_PI, Gate.CNOT_LIKE)
    for protocol in (Protocol.CHRW, Protocol.RWA_BS, Protocol.RWA)
]


@pytest.mark.parametrize("gate,protocol", TABLE_CASES)
def test_shortest_gate_times(gate, protocol):
    expected = REFERENCE_GATE_TIMES[gate][protocol]
    slack = 3 if protocol == Protocol.RWA else 1
    k = shortest_gate_time(protocol, gate, k_max=expected + slack)
    assert k is not None
    assert abs(k - expected) <= slack


def test_cnot_like_at_five():
    assert final_fidelity(Protocol.CHRW, Gate.CNOT_LIKE, 5) >= 0.9999
    assert final_fidelity(Protocol.RWA, Gate.CNOT_LIKE, 5) < 0.9999


def test_constant_drive_populations():
    times = np.linspace(0.0, 200.0, 801)
    deviations = {}
    for protocol in (Protocol.CHRW, Protocol.RWA):
        program = constant_drive_program(protocol, 0.1, 0.1, 200.0)
        exact, effective = population_comparison(protocol, program, times)
        deviations[protocol] = float(np.max(np.abs(exact - effective)))
    assert deviations[Protocol.CHRW] <= 0.01
    assert deviations[Protocol.RWA] >= 5 * deviations[Protocol.CHRW]


def test_time_averaged_ordering():
    grid = [0.05, 0.1, 0.2, 0.3, 0.4, 0.5]
    rows = time_averaged_infidelity_scan(grid, threads=1)
    table = {(row["protocol"], row["omega0"]): row["infidelity"] for row in rows}
    for omega0 in grid:
        assert table[(Protocol.CHRW, omega0)] < table[(Protocol.RWA_BS, omega0)] < table[(Protocol.RWA, omega0)]
    assert table[(Protocol.CHRW, 0.5)] <= 1e-3


NOISE_TARGETS = [NoiseTarget.OMEGA0, NoiseTarget.DELTA]


def test_systematic_noise_tolerance():
    rows = robustness_sweep(Gate.HADAMARD, Protocol.CHRW, [-0.01, -0.005, 0.0, 0.005, 0.01],
                            NoiseKind.SYSTEMATIC, NOISE_TARGETS,
                            T=16 * math.pi, threads=1)
    assert all(row["mean_infidelity"] <= 1e-4 for row in rows)


def _noise_infidelity(protocol, rate, kind, **kwargs):
    [row] = robustness_sweep(Gate.HADAMARD, protocol, [rate], kind, NOISE_TARGETS,
                             T=16 * math.pi, **kwargs)
    return row["mean_infidelity"]


def test_systematic_noise_ordering():
    values = {p: _noise_infidelity(p, 0.05, NoiseKind.SYSTEMATIC, threads=1)
              for p in (Protocol.CHRW, Protocol.RWA_BS, Protocol.RWA)}
    assert values[Protocol.CHRW] < values[Protocol.RWA_BS] < values[Protocol.RWA]


# upper bounds one decade above the expected degradation
STOCHASTIC_CEILINGS = {Protocol.CHRW: 1e-5, Protocol.RWA_BS: 1e-4, Protocol.RWA: 1e-3}


def test_stochastic_noise_degradation():
    degradation = {}
    for protocol, ceiling in STOCHASTIC_CEILINGS.items():
        clean = _noise_infidelity(protocol, 0.0, NoiseKind.SYSTEMATIC, threads=1)
        noisy = _noise_infidelity(protocol, 0.05, NoiseKind.STOCHASTIC, trials=200, seed=2024)
        degradation[protocol] = noisy - clean
        assert abs(degradation[protocol]) <= ceiling
    assert abs(degradation[Protocol.CHRW]) < abs(degradation[Protocol.RWA])


def test_decoherence_threshold():
    rows = decoherence_sweep(Gate.HADAMARD, [25e3], threads=1)
    by_protocol = {row["protocol"]: row["mean_infidelity"] for row in rows}
    assert by_protocol[Protocol.CHRW] <= 2e-4
    assert by_protocol[Protocol.CHRW] < by_protocol[Protocol.RWA_BS]
    assert by_protocol[Protocol.CHRW] < by_protocol[Protocol.RWA]


def test_closed_system_hadamard():
    [row] = decoherence_sweep(Gate.HADAMARD, [0.0], protocols=[Protocol.CHRW], threads=1)
    assert row["mean_infidelity"] <= 1e-4


def test_leakage_decreases_with_gap():
    program = synthesize(preset_target(Gate.HADAMARD), 6 * math.pi)
    rows = leakage_sweep(program, [2.0, 4.0, 10.0])
    values = [row["infidelity"] for row in rows]
    assert values[2] < values[0]
    assert values[2] <= 1e-4


def test_fluxonium_reference_device():
    result = spectrum(device_params())
    assert result.omega01 == pytest.approx(0.3, rel=0.15)
    assert result.omega12 == pytest.approx(3.5, rel=0.15)
    refined = spectrum(device_params(n_basis=2 * result.n_basis))
    assert abs(refined.omega01 - result.omega01) / result.omega01 < 1e-6
