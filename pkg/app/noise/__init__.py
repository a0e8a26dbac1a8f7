"""Systematic and stochastic control noise."""
from app.noise.injection import apply_noise, apply_stochastic, apply_systematic
from app.noise.sweeps import robustness_sweep

__all__ = ["apply_noise", "apply_stochastic", "apply_systematic", "robustness_sweep"]
