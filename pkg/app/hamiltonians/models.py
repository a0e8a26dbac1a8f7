"""
Build LabSystem and ProtocolModel views of a sampled PulseProgram.

Waveforms are linearly interpolated between samples.
"""
from __future__ import annotations

from functools import partial

import numpy as np

from app.constants import Protocol
from app.errors import DomainError
from app.schemas.hamiltonian import DriveTone, LabSystem, ProtocolModel
from app.schemas.pulse import PulseProgram


def _sampled(times: np.ndarray, values: np.ndarray, t: float) -> float:
    return float(np.interp(t, times, values))


def waveform(program: PulseProgram, name: str):
    """Callable t -> interpolated waveform `name`."""
    return partial(_sampled, program.times, getattr(program, name))


def lab_system(program: PulseProgram) -> LabSystem:
    tones = [DriveTone(index=0, amplitude=waveform(program, "omega0"), phase=waveform(program, "phi0"))]
    if np.any(program.omega1 != 0.0):
        tones.append(DriveTone(index=1, amplitude=waveform(program, "omega1"),
                               phase=waveform(program, "phi1")))
    return LabSystem(
        qubit_frequency=waveform(program, "omega_q"),
        drive_frequency=program.omega,
        tones=tones,
    )


def _qubit_detuning(program: PulseProgram):
    return partial(_sampled, program.times, program.omega_q - program.omega)


def _half(program: PulseProgram, name: str):
    return partial(_sampled, program.times, 0.5 * getattr(program, name))


def protocol_model(kind: str, program: PulseProgram) -> ProtocolModel:
    """
    Effective model of `kind` for the given controls.

    RWA and RWA_BS read the lab controls directly (Delta_q, Omega_n/2, phi_n);
    CHRW reads the renormalized quantities stored with the program.
    """
    if kind == Protocol.CHRW:
        return ProtocolModel(
            kind=kind,
            drive_frequency=program.omega,
            effective_detuning=waveform(program, "delta_eff"),
            effective_amplitude=waveform(program, "omega_eff"),
            effective_phase=waveform(program, "phi0"),
            z=waveform(program, "z"),
        )
    if kind in (Protocol.RWA, Protocol.RWA_BS):
        has_second = bool(np.any(program.omega1 != 0.0))
        return ProtocolModel(
            kind=kind,
            drive_frequency=program.omega,
            effective_detuning=_qubit_detuning(program),
            effective_amplitude=_half(program, "omega0"),
            effective_phase=waveform(program, "phi0"),
            secondary_amplitude=_half(program, "omega1") if has_second else None,
            secondary_phase=waveform(program, "phi1") if has_second else None,
        )
    raise DomainError(f"ERROR: unknown protocol {kind!r}")
