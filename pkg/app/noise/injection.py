"""
Control-noise injection into pulse programs.

Noise acts on the lab controls only; the effective-model arrays keep the
noiseless design so results can be scored against the intended gate.
Programs are never modified in place.
"""
from __future__ import annotations

import logging
from typing import Union

import numpy as np

from app.constants import NoiseKind, NoiseTarget
from app.errors import DomainError
from app.schemas.noise import NoiseSpec
from app.schemas.pulse import PulseProgram

logger = logging.getLogger(__name__)

Offset = Union[float, np.ndarray]


def _perturb(program: PulseProgram, target: str, delta: Offset, updates: dict) -> None:
    """Record the noisy version of one control in `updates` (x -> x + delta * x)."""
    if target == NoiseTarget.OMEGA0:
        updates["omega0"] = program.omega0 + delta * program.omega0
    elif target == NoiseTarget.OMEGA1:
        updates["omega1"] = program.omega1 + delta * program.omega1
    elif target == NoiseTarget.DELTA:
        updates["omega_q"] = program.omega_q + delta * (program.omega_q - program.omega)
    elif target == NoiseTarget.PHI0:
        updates["phi0"] = program.phi0 + delta * program.phi0
    elif target == NoiseTarget.PHI1:
        updates["phi1"] = program.phi1 + delta * program.phi1
    elif target == NoiseTarget.TIME:
        scale = float(np.ravel(delta)[0])
        updates["times"] = program.times + scale * program.times
        updates["T"] = program.T + scale * program.T
    else:
        raise DomainError(f"ERROR: unknown noise target {target!r}")


def apply_systematic(program: PulseProgram, spec: NoiseSpec) -> PulseProgram:
    """Scale every targeted control by (1 + rate)."""
    if spec.kind != NoiseKind.SYSTEMATIC:
        raise DomainError(f"ERROR: expected systematic noise, got {spec.kind}")
    updates: dict = {}
    for target in spec.targets:
        _perturb(program, target, spec.rate, updates)
    return program.replace(**updates)


def segment_offsets(program: PulseProgram, rng: np.random.Generator, epsilon: float,
                    segments: int) -> np.ndarray:
    """Piecewise-constant offsets uniform in [-epsilon, epsilon], one per time segment."""
    draws = rng.uniform(-epsilon, epsilon, segments)
    index = np.minimum((program.times / program.T * segments).astype(int), segments - 1)
    return draws[index]


def apply_stochastic(program: PulseProgram, spec: NoiseSpec) -> PulseProgram:
    """
    Independent piecewise-constant noise per target, drawn in sorted target
    order from a generator seeded with spec.seed. The time-axis target uses the
    first segment's draw as a single stretch factor.
    """
    if spec.kind != NoiseKind.STOCHASTIC:
        raise DomainError(f"ERROR: expected stochastic noise, got {spec.kind}")
    rng = np.random.default_rng(spec.seed)
    updates: dict = {}
    for target in spec.targets:
        _perturb(program, target, segment_offsets(program, rng, spec.rate, spec.segments), updates)
    return program.replace(**updates)


def apply_noise(program: PulseProgram, spec: NoiseSpec) -> PulseProgram:
    if spec.kind == NoiseKind.SYSTEMATIC:
        return apply_systematic(program, spec)
    return apply_stochastic(program, spec)


def trial_seed(seed: int, trial: int) -> int:
    """Seed of one stochastic trial."""
    return seed ^ trial
