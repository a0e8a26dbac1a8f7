"""
Geometric phase of the cyclic schedule and the Lambda that realizes a target phase.
"""
from __future__ import annotations

import logging
import math
from typing import Optional

from app.constants import GATE_PRESETS, LAMBDA_BRACKET, SINGLE_QUBIT_GATES
from app.errors import BracketError, DomainError
from app.numerics.roots import find_root, integrate
from app.schemas.pulse import GateTarget

logger = logging.getLogger(__name__)


def geometric_phase_integral(beta0: float, lam: float) -> float:
    """pi * int_0^pi sin(u) sin^2((beta0 + lam sin^2 u) / 2) du."""
    def integrand(u: float) -> float:
        return math.sin(u) * math.sin(0.5 * (beta0 + lam * math.sin(u) ** 2)) ** 2

    return math.pi * integrate(integrand, 0.0, math.pi, abs_tol=1e-12)


def geometric_phase(target: GateTarget, T: Optional[float] = None) -> float:
    """
    Theta_+(T) accumulated over the schedule. Independent of T after the
    substitution u = pi t / T; T is accepted for symmetry with other operations.
    """
    if target.lam is None:
        raise DomainError(f"ERROR: gate {target.name!r} has no Lambda")
    return geometric_phase_integral(target.beta0, target.lam)


def solve_lambda(alpha0: float, beta0: float, theta_target: float) -> float:
    """
    Lambda in [0, 2] with Theta_+ = theta_target (absolute value, no mod-2pi folding).
    alpha0 does not enter the phase; it is part of the gate signature only.
    """
    lo, hi = LAMBDA_BRACKET
    try:
        lam = find_root(lambda x: geometric_phase_integral(beta0, x) - theta_target,
                        lo, hi, tol=1e-8, what="Lambda")
    except BracketError as exc:
        raise BracketError(
            lo, hi, exc.f_lo + theta_target, exc.f_hi + theta_target,
            what=f"Lambda (Theta_+ at the bracket ends; target {theta_target:.6g})",
        ) from exc
    logger.debug(f"Lambda={lam:.10f} for alpha0={alpha0:.4f}, beta0={beta0:.4f}, theta={theta_target:.4f}")
    return lam


def resolve_target(target: GateTarget) -> GateTarget:
    """Return the target with Lambda filled in by solve_lambda when missing."""
    if target.lam is not None:
        return target
    lam = solve_lambda(target.alpha0, target.beta0, target.theta)
    return target.model_copy(update={"lam": lam})


def preset_target(name: str, solve: bool = True) -> GateTarget:
    """
    GateTarget for a named single-qubit gate. With solve=True, Lambda is
    recomputed from the geometric phase; otherwise the tabulated value is used.
    """
    if name not in SINGLE_QUBIT_GATES:
        raise DomainError(f"ERROR: unknown single-qubit gate {name!r}")
    alpha0, beta0, theta, lam = GATE_PRESETS[name]
    target = GateTarget(name=name, alpha0=alpha0, beta0=beta0, theta=theta,
                        lam=None if solve else lam)
    return resolve_target(target)
