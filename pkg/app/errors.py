"""
Exception hierarchy of the gate engine.

Every error derives from GateEngineError and from the builtin it refines, so
callers can catch either the engine type or the plain ValueError/RuntimeError.
"""
from typing import Optional


class GateEngineError(Exception):
    """Base class for all engine errors."""


class DomainError(GateEngineError, ValueError):
    """An argument lies outside the domain an operation supports."""


class BracketError(GateEngineError, ValueError):
    """A root bracket does not contain a sign change."""

    def __init__(self, lo: float, hi: float, f_lo: float, f_hi: float, what: str = "root"):
        self.lo, self.hi, self.f_lo, self.f_hi = lo, hi, f_lo, f_hi
        super().__init__(
            f"ERROR: no sign change for {what} on [{lo:.6g}, {hi:.6g}]: "
            f"f(lo)={f_lo:.6g}, f(hi)={f_hi:.6g}"
        )


class ValidityError(GateEngineError, ValueError):
    """The requested CHRW working point is outside the model's validity region."""


class ConvergenceError(GateEngineError, RuntimeError):
    """An iteration or truncation did not converge."""


class IntegrationError(GateEngineError, RuntimeError):
    """The ODE solver failed."""


class PositivityError(IntegrationError):
    """A propagated density matrix left the positive cone."""


class ConfigError(GateEngineError, ValueError):
    """Experiment configuration could not be parsed or validated."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"ERROR: {prefix}{message}")


class OutputError(GateEngineError, OSError):
    """An artifact file could not be written."""


class ChrwValidityWarning(UserWarning):
    """A CHRW model was evaluated with Z outside its validity window."""
