"""Numerical kernels: Bessel functions, root finding, quadrature, propagators."""
from app.numerics.bessel import bessel_j, bessel_j_orders
from app.numerics.propagators import propagate_unitary, propagate_unitary_trace
from app.numerics.roots import find_root, integrate

__all__ = [
    "bessel_j",
    "bessel_j_orders",
    "find_root",
    "integrate",
    "propagate_unitary",
    "propagate_unitary_trace",
]
