"""
Scenario orchestration.

run_scenario() dispatches an ExperimentConfig to one handler per subcommand or
reproduction target. Every handler writes its artifacts under config.output
and every artifact carries the same metadata header (version, config hash,
seed, scenario, units).
"""
from __future__ import annotations

import logging
import math
from pathlib import Path
from typing import Callable, Dict, List, Optional

import numpy as np

from app import __version__
from app.config import settings
from app.constants import (
    CONTROLLED_GATE_BASE,
    DECOHERENCE_SWEEP_HZ,
    GATE_PRESETS,
    RATE_PRESETS,
    REFERENCE_GATE_TIMES,
    SINGLE_QUBIT_GATES,
    STOCHASTIC_SWEEP_GRID,
    VALID_GATES,
    VALID_PROTOCOLS,
    Gate,
    NoiseKind,
)
from app.errors import DomainError
from app.fluxonium.circuit import coupling_ratio, device_params, spectrum
from app.gatesim.calibration import constant_drive_program, population_comparison
from app.gatesim.fidelity import fidelity_trace
from app.gatesim.leakage import leakage_sweep
from app.gatesim.scans import fidelity_vs_gate_time, shortest_gate_time, time_averaged_infidelity_scan
from app.gatesim.two_qubit import two_qubit_gate
from app.hamiltonians.effective import speed_limit_bound
from app.io.writers import emit_csv, emit_json
from app.noise.sweeps import robustness_sweep
from app.open_system.fidelity import default_grid
from app.open_system.sweeps import decoherence_sweep, gate_time_ns
from app.schemas.experiment import ExperimentConfig
from app.schemas.open_system import InputStateGrid
from app.schemas.pulse import PulseProgram
from app.synthesis.phase import preset_target, solve_lambda
from app.synthesis.program import design_program
from app.utils.hashing import config_hash

logger = logging.getLogger(__name__)

PROGRAM_COLUMNS = ["t", "Omega0", "Omega1", "phi0", "phi1", "omega_q", "Z", "Delta_eff", "Omega_eff"]
TRACE_COLUMNS = ["t", "fbar"]
SCAN_COLUMNS = ["protocol", "gate", "k", "fidelity"]
NOISE_COLUMNS = ["gate", "protocol", "kind", "targets", "rate", "T", "trials", "mean_infidelity"]
DECOHERENCE_COLUMNS = [
    "gamma_over_2pi_Hz", "gamma_phi_over_2pi_Hz", "protocol", "gate", "k", "gate_time_ns",
    "mean_infidelity", "n_states",
]
LEAKAGE_COLUMNS = ["protocol", "gap", "lambda_f", "infidelity"]

# Constant-drive scenarios: drive and detuning in units of omega.
POPULATION_DRIVE = 0.1
POPULATION_DETUNING = 0.1
POPULATION_DURATION = 200.0
AVERAGED_DRIVES = [round(0.05 * i, 2) for i in range(1, 11)]
SHAPE_GATE_TIME = 5
FIDELITY_SCAN_KS = list(range(1, 41))
LEAKAGE_GAPS = [2.0, 4.0, 6.0, 8.0, 10.0, 12.0, 14.0, 16.0, 18.0, 20.0]


class RunContext:
    """Output directory and shared metadata of one run."""

    def __init__(self, config: ExperimentConfig):
        self.config = config
        self.out = Path(config.output)
        self.metadata: Dict[str, object] = {
            "version": __version__,
            "config_hash": config_hash(config),
            "seed": config.seed,
            "scenario": config.scenario,
            "units": config.units,
        }

    def csv(self, name: str, rows: List[dict], columns: List[str], **extra) -> Path:
        return emit_csv(rows, columns, self.out / name, {**self.metadata, **extra})

    def json(self, name: str, data, **extra) -> Path:
        return emit_json(data, self.out / name, {**self.metadata, **extra})


def _base_gate(gate: str) -> str:
    return CONTROLLED_GATE_BASE.get(gate, gate)


def _gate_times(config: ExperimentConfig, protocol: str) -> List[int]:
    if config.gate_times:
        return [int(k) for k in config.gate_times]
    return [REFERENCE_GATE_TIMES[config.gate][protocol]]


def _program(config: ExperimentConfig, protocol: str, k: int) -> PulseProgram:
    omega = settings.OMEGA
    return design_program(protocol, preset_target(_base_gate(config.gate)), k * math.pi / omega,
                          omega, config.samples)


def program_rows(program: PulseProgram, physical: bool = False) -> List[dict]:
    rows = []
    for i, t in enumerate(program.times):
        row = {
            "t": float(t),
            "Omega0": float(program.omega0[i]),
            "Omega1": float(program.omega1[i]),
            "phi0": float(program.phi0[i]),
            "phi1": float(program.phi1[i]),
            "omega_q": float(program.omega_q[i]),
            "Z": float(program.z[i]),
            "Delta_eff": float(program.delta_eff[i]),
            "Omega_eff": float(program.omega_eff[i]),
        }
        if physical:
            row["t_ns"] = gate_time_ns(float(t) * program.omega / math.pi)
        rows.append(row)
    return rows


def _program_columns(config: ExperimentConfig) -> List[str]:
    return PROGRAM_COLUMNS + (["t_ns"] if config.units == "physical" else [])


# ============================================================================
# Subcommands
# ============================================================================

def run_synthesize(ctx: RunContext) -> List[Path]:
    config = ctx.config
    paths = []
    for protocol in config.protocols:
        for k in _gate_times(config, protocol):
            program = _program(config, protocol, k)
            rows = program_rows(program, config.units == "physical")
            paths.append(ctx.csv(f"program_{config.gate}_{protocol}_k{k}.csv", rows,
                                 _program_columns(config), protocol=protocol, k=k,
                                 units_note="times in 1/omega, frequencies in omega"))
    return paths


def run_simulate(ctx: RunContext) -> List[Path]:
    config = ctx.config
    paths = []
    for protocol in config.protocols:
        for k in _gate_times(config, protocol):
            program = _program(config, protocol, k)
            if config.gate == Gate.CNOT_LIKE:
                trace = two_qubit_gate(protocol, program)
            else:
                trace = fidelity_trace(protocol, program)
            rows = [{"t": float(t), "fbar": float(f)} for t, f in zip(trace.times, trace.fbar)]
            paths.append(ctx.csv(f"trace_{config.gate}_{protocol}_k{k}.csv", rows, TRACE_COLUMNS,
                                 protocol=protocol, k=k, favg=repr(trace.favg),
                                 final=repr(trace.final)))
    return paths


def run_sweep(ctx: RunContext) -> List[Path]:
    config = ctx.config
    ks = [int(k) for k in config.gate_times] or FIDELITY_SCAN_KS
    rows = []
    for protocol in config.protocols:
        rows.extend(fidelity_vs_gate_time(protocol, config.gate, ks, n_samples=config.samples,
                                          threads=config.threads))
    return [ctx.csv(f"sweep_{config.gate}.csv", rows, SCAN_COLUMNS)]


def run_noise(ctx: RunContext) -> List[Path]:
    config = ctx.config
    noise = config.noise
    # one gate time shared by all protocols
    k = int(config.gate_times[0]) if config.gate_times else settings.NOISE_GATE_K
    rows = []
    for protocol in config.protocols:
        rows.extend(robustness_sweep(
            config.gate, protocol, noise.rates, noise.kind, noise.targets, trials=noise.trials,
            T=k * math.pi / settings.OMEGA, seed=config.seed, segments=noise.segments,
            threads=config.threads, n_samples=config.samples,
        ))
    return [ctx.csv(f"noise_{config.gate}_{noise.kind}.csv", rows, NOISE_COLUMNS, gate_k=k,
                    segments=noise.segments, targets="+".join(sorted(noise.targets)))]


def _decoherence_grids(config: ExperimentConfig) -> tuple[List[float], Optional[List[float]]]:
    rates = config.rates
    if rates.gamma_hz:
        return rates.gamma_hz, rates.gamma_phi_hz or None
    if rates.preset is not None:
        gamma, gamma_phi = RATE_PRESETS[rates.preset]
        return [gamma], [gamma_phi]
    return list(DECOHERENCE_SWEEP_HZ), None


def run_lindblad(ctx: RunContext) -> List[Path]:
    config = ctx.config
    gammas, gamma_phis = _decoherence_grids(config)
    grid: Optional[InputStateGrid] = default_grid(full=True) if config.rates.full_grid else None
    gate_times = ({p: int(config.gate_times[0]) for p in config.protocols}
                  if config.gate_times else None)
    rows = decoherence_sweep(config.gate, gammas, config.protocols, gate_times, gamma_phis,
                             grid=grid, n_samples=config.samples, threads=config.threads)
    return [ctx.csv(f"lindblad_{config.gate}.csv", rows, DECOHERENCE_COLUMNS,
                    omega_over_2pi_Hz=settings.PHYSICAL_OMEGA_HZ)]


def run_leakage(ctx: RunContext) -> List[Path]:
    config = ctx.config
    if config.gate == Gate.CNOT_LIKE:
        raise DomainError("ERROR: the leakage model covers single-qubit gates only")
    rows = []
    for protocol in config.protocols:
        program = _program(config, protocol, _gate_times(config, protocol)[0])
        for row in leakage_sweep(program, config.leakage.gaps, config.leakage.lambda_f, protocol):
            rows.append({"protocol": protocol, **row})
    return [ctx.csv(f"leakage_{config.gate}.csv", rows, LEAKAGE_COLUMNS)]


def run_fluxonium(ctx: RunContext) -> List[Path]:
    params = device_params()
    result = spectrum(params)
    row = {**params.model_dump(), **result.model_dump(exclude={"n_basis"}),
           "coupling_ratio": coupling_ratio(params)}
    columns = list(row)
    return [
        ctx.csv("fluxonium.csv", [row], columns, energies="E/2pi in GHz"),
        ctx.json("fluxonium.json", {"params": params, "spectrum": result,
                                    "coupling_ratio": row["coupling_ratio"]}),
    ]


# ============================================================================
# Reproductions
# ============================================================================

def reproduce_table1(ctx: RunContext) -> List[Path]:
    rows = []
    for gate in SINGLE_QUBIT_GATES:
        alpha0, beta0, theta, reference = GATE_PRESETS[gate]
        lam = solve_lambda(alpha0, beta0, theta)
        logger.info(f"{gate}: Lambda={lam:.4f} (reference {reference})")
        rows.append({"gate": gate, "alpha0": alpha0, "beta0": beta0, "theta": theta,
                     "lambda": lam, "lambda_reference": reference})
    columns = ["gate", "alpha0", "beta0", "theta", "lambda", "lambda_reference"]
    return [ctx.csv("table1.csv", rows, columns)]


def reproduce_table2(ctx: RunContext) -> List[Path]:
    rows = []
    for gate in VALID_GATES:
        for protocol in VALID_PROTOCOLS:
            k = shortest_gate_time(protocol, gate, n_samples=ctx.config.samples)
            rows.append({"gate": gate, "protocol": protocol, "k": k,
                         "k_reference": REFERENCE_GATE_TIMES[gate][protocol]})
    return [ctx.csv("table2.csv", rows, ["gate", "protocol", "k", "k_reference"],
                    fidelity_floor=settings.FIDELITY_FLOOR)]


def reproduce_fig1(ctx: RunContext) -> List[Path]:
    times = np.linspace(0.0, POPULATION_DURATION, 2001)
    rows = []
    for protocol in VALID_PROTOCOLS:
        program = constant_drive_program(protocol, POPULATION_DRIVE, POPULATION_DETUNING,
                                         POPULATION_DURATION)
        exact, effective = population_comparison(protocol, program, times)
        rows.extend({"protocol": protocol, "t": float(t), "pg_exact": float(a), "pg_effective": float(b)}
                    for t, a, b in zip(times, exact, effective))
    return [ctx.csv("fig1.csv", rows, ["protocol", "t", "pg_exact", "pg_effective"],
                    omega0=POPULATION_DRIVE, detuning=POPULATION_DETUNING)]


def reproduce_fig2(ctx: RunContext) -> List[Path]:
    rows = time_averaged_infidelity_scan(AVERAGED_DRIVES, POPULATION_DETUNING,
                                         threads=ctx.config.threads)
    return [ctx.csv("fig2.csv", rows, ["protocol", "omega0", "infidelity"],
                    detuning=POPULATION_DETUNING, duration="100/Omega0")]


def reproduce_fig3(ctx: RunContext) -> List[Path]:
    paths = []
    for protocol in VALID_PROTOCOLS:
        program = design_program(protocol, preset_target(Gate.HADAMARD),
                                 SHAPE_GATE_TIME * math.pi / settings.OMEGA)
        paths.append(ctx.csv(f"fig3_{protocol}.csv", program_rows(program), PROGRAM_COLUMNS,
                             protocol=protocol, k=SHAPE_GATE_TIME,
                             peak_omega0=repr(float(np.max(np.abs(program.omega0))))))
    bound = speed_limit_bound()
    paths.append(ctx.csv("fig3_speed_limit.csv", [bound], ["chrw", "rwa", "ratio"]))
    return paths


def reproduce_fig4(ctx: RunContext) -> List[Path]:
    rows = []
    for gate in VALID_GATES:
        for protocol in VALID_PROTOCOLS:
            rows.extend(fidelity_vs_gate_time(protocol, gate, FIDELITY_SCAN_KS,
                                              threads=ctx.config.threads))
    return [ctx.csv("fig4.csv", rows, SCAN_COLUMNS)]


def reproduce_fig5(ctx: RunContext) -> List[Path]:
    config = ctx.config
    targets = list(config.noise.targets)
    paths = []
    for kind, grid in ((NoiseKind.SYSTEMATIC, config.noise.rates),
                       (NoiseKind.STOCHASTIC, STOCHASTIC_SWEEP_GRID)):
        rows = []
        for protocol in VALID_PROTOCOLS:
            rows.extend(robustness_sweep(Gate.HADAMARD, protocol, grid, kind, targets,
                                         trials=config.noise.trials, seed=config.seed,
                                         segments=config.noise.segments, threads=config.threads))
        paths.append(ctx.csv(f"fig5_{kind}.csv", rows, NOISE_COLUMNS,
                             gate_k=settings.NOISE_GATE_K, segments=config.noise.segments,
                             targets="+".join(sorted(targets))))
    return paths


def reproduce_fig6(ctx: RunContext) -> List[Path]:
    config = ctx.config
    grid = default_grid(full=config.rates.full_grid)
    paths = []
    for gate in (Gate.HADAMARD, Gate.CNOT_LIKE):
        rows = decoherence_sweep(gate, DECOHERENCE_SWEEP_HZ, VALID_PROTOCOLS,
                                 grid=None if gate == Gate.CNOT_LIKE else grid,
                                 threads=config.threads)
        paths.append(ctx.csv(f"fig6_{gate}.csv", rows, DECOHERENCE_COLUMNS,
                             omega_over_2pi_Hz=settings.PHYSICAL_OMEGA_HZ))
    return paths


def reproduce_fig7(ctx: RunContext) -> List[Path]:
    k = REFERENCE_GATE_TIMES[Gate.HADAMARD][VALID_PROTOCOLS[0]]
    program = design_program(VALID_PROTOCOLS[0], preset_target(Gate.HADAMARD),
                             k * math.pi / settings.OMEGA)
    rows = [{"protocol": program.protocol, **row}
            for row in leakage_sweep(program, LEAKAGE_GAPS, settings.LAMBDA_F, program.protocol)]
    return [ctx.csv("fig7.csv", rows, LEAKAGE_COLUMNS, k=k)]


HANDLERS: Dict[str, Callable[[RunContext], List[Path]]] = {
    "synthesize": run_synthesize,
    "simulate": run_simulate,
    "sweep": run_sweep,
    "noise": run_noise,
    "lindblad": run_lindblad,
    "leakage": run_leakage,
    "fluxonium": run_fluxonium,
    "table1": reproduce_table1,
    "table2": reproduce_table2,
    "fig1": reproduce_fig1,
    "fig2": reproduce_fig2,
    "fig3": reproduce_fig3,
    "fig4": reproduce_fig4,
    "fig5": reproduce_fig5,
    "fig6": reproduce_fig6,
    "fig7": reproduce_fig7,
}


def run_scenario(config: ExperimentConfig) -> List[Path]:
    """Run one scenario and return the paths of the files it wrote."""
    handler = HANDLERS[config.scenario]
    logger.info(f"scenario {config.scenario!r} started (config {config_hash(config)})")
    paths = handler(RunContext(config))
    logger.info(f"scenario {config.scenario!r} finished: {len(paths)} file(s)")
    return paths
