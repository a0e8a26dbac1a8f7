"""
Bracketed root finding and 1-D quadrature.
"""
from __future__ import annotations

import logging
from typing import Callable

import numpy as np
from scipy.integrate import quad
from scipy.optimize import brentq

from app.errors import BracketError

logger = logging.getLogger(__name__)


def find_root(f: Callable[[float], float], lo: float, hi: float, tol: float = 1e-12,
              what: str = "root") -> float:
    """
    Root of f in [lo, hi] by Brent's method.

    Raises BracketError when f(lo) and f(hi) have the same sign. The result
    satisfies |f(x)| <= tol for any f that is not pathologically steep; a
    larger residual is logged.
    """
    f_lo, f_hi = f(lo), f(hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if f_lo * f_hi > 0:
        raise BracketError(lo, hi, f_lo, f_hi, what)
    x = brentq(f, lo, hi, xtol=1e-15, rtol=4 * np.finfo(float).eps, maxiter=200)
    residual = abs(f(x))
    if residual > tol:
        logger.warning(f"{what}: residual {residual:.3e} above tolerance {tol:.1e} at x={x:.15g}")
    return float(x)


def integrate(f: Callable[[float], float], a: float, b: float, abs_tol: float = 1e-12) -> float:
    """Adaptive Gauss-Kronrod quadrature of f over [a, b]."""
    value, err = quad(f, a, b, epsabs=abs_tol, epsrel=1e-12, limit=200)
    if err > 10 * abs_tol:
        logger.debug(f"quadrature error estimate {err:.2e} on [{a}, {b}]")
    return float(value)
