"""
Controls that make the schedule's invariant exact with zero dynamical phase,
and the inversion of the CHRW renormalization (Z, omega_q).
"""
from __future__ import annotations

import math
from typing import Optional, Tuple

from app.constants import Z_MAX
from app.errors import ValidityError
from app.numerics.bessel import bessel_j
from app.numerics.roots import find_root
from app.schemas.pulse import ScheduleSample

# Omega~_0 below this is treated as an amplitude node (phase undefined).
AMPLITUDE_NODE = 1e-14


def required_controls(s: ScheduleSample) -> Tuple[float, float, Optional[float]]:
    """
    (Delta~_q, Omega~_0, phi_0) for one schedule sample.

    phi_0 is None where Omega~_0 vanishes; callers extend it from the nearest
    sample.
    """
    sin2b = math.sin(2.0 * s.beta)
    x = 0.25 * (s.alpha_dot * sin2b * math.sin(s.alpha) - 2.0 * s.beta_dot * math.cos(s.alpha))
    y = 0.25 * (s.alpha_dot * sin2b * math.cos(s.alpha) + 2.0 * s.beta_dot * math.sin(s.alpha))
    delta = -s.alpha_dot * math.sin(s.beta) ** 2
    amplitude = 0.25 * math.sqrt(s.alpha_dot ** 2 * sin2b ** 2 + 4.0 * s.beta_dot ** 2)
    phase = math.atan2(y, x) if amplitude > AMPLITUDE_NODE else None
    return delta, amplitude, phase


def bessel_ratio(z: float) -> float:
    return bessel_j(1, z) / bessel_j(0, z)


MAX_RATIO = bessel_ratio(Z_MAX)


def solve_z_wq(omega_req: float, delta_req: float, omega: float) -> Tuple[float, float]:
    """
    (Z, omega_q) with omega_q J_1(Z) = Omega~_0 and omega_q J_0(Z) - omega = Delta~_q.
    """
    base = omega + delta_req
    if base <= 0:
        raise ValidityError(f"ERROR: omega + Delta~ = {base:.6g} must be positive")
    if omega_req < 0:
        raise ValidityError(f"ERROR: effective amplitude must be non-negative, got {omega_req}")
    if omega_req == 0.0:
        return 0.0, base
    ratio = omega_req / base
    if ratio > MAX_RATIO:
        raise ValidityError(
            f"ERROR: required J1/J0 ratio {ratio:.4f} exceeds {MAX_RATIO:.4f} (Z > {Z_MAX}); drive too strong"
        )
    z = find_root(lambda v: bessel_ratio(v) - ratio, 0.0, Z_MAX, tol=1e-13, what="Z")
    return z, base / bessel_j(0, z)
