"""
Cyclic schedule of the invariant's polar angles.

alpha(t) = alpha0 + pi [1 - cos(pi t / T)] and beta(t) = beta0 + Lambda sin^2(pi t / T),
so alpha advances by 2pi and beta returns to beta0 at t = T.
"""
from __future__ import annotations

import math

from app.errors import DomainError
from app.schemas.pulse import GateTarget, ScheduleSample


def schedule(target: GateTarget, T: float, t: float) -> ScheduleSample:
    if T <= 0:
        raise DomainError(f"ERROR: gate time must be positive, got {T}")
    if t < -1e-12 * T or t > T * (1 + 1e-12):
        raise DomainError(f"ERROR: t={t} outside [0, {T}]")
    if target.lam is None:
        raise DomainError(f"ERROR: gate {target.name!r} has no Lambda; call resolve_target first")
    u = math.pi * t / T
    return ScheduleSample(
        t=t,
        alpha=target.alpha0 + math.pi * (1.0 - math.cos(u)),
        beta=target.beta0 + target.lam * math.sin(u) ** 2,
        alpha_dot=(math.pi ** 2 / T) * math.sin(u),
        beta_dot=(target.lam * math.pi / T) * math.sin(2.0 * u),
    )
