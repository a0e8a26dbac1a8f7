"""Tests for schedule, geometric phase and pulse program synthesis."""
import math

import numpy as np
import pytest
from pydantic import ValidationError

from app.constants import GATE_PRESETS, Z_MAX, Gate, Protocol
from app.errors import BracketError, DomainError, ValidityError
from app.numerics.bessel import bessel_j
from app.schemas.pulse import GateTarget
from app.synthesis.controls import MAX_RATIO, required_controls, solve_z_wq
from app.synthesis.phase import (
    geometric_phase,
    geometric_phase_integral,
    preset_target,
    resolve_target,
    solve_lambda,
)
from app.synthesis.program import design_program, gate_time_index, synthesize, synthesize_baseline
from app.synthesis.schedule import schedule

from tests.conftest import FAST_SAMPLES


@pytest.mark.parametrize("gate", [Gate.NOT, Gate.HADAMARD, Gate.PHASE_PI])
def test_lambda_matches_reference_table(gate):
    alpha0, beta0, theta, lam = GATE_PRESETS[gate]
    assert solve_lambda(alpha0, beta0, theta) == pytest.approx(lam, abs=2e-3)


@pytest.mark.parametrize("gate", [Gate.NOT, Gate.HADAMARD, Gate.PHASE_PI])
def test_solved_lambda_reproduces_phase(gate):
    target = preset_target(gate)
    assert geometric_phase(target) == pytest.approx(target.theta, abs=1e-8)


def test_unreachable_phase_reports_bracket():
    # with beta0 = pi/2 the phase never drops below pi
    with pytest.raises(BracketError):
        solve_lambda(0.0, math.pi / 2, 0.5)


def test_resolve_keeps_given_lambda():
    target = GateTarget(name="custom", alpha0=0.1, beta0=0.3, theta=1.0, lam=0.5)
    assert resolve_target(target) is target


def test_gate_target_validation():
    with pytest.raises(ValidationError):
        GateTarget(name=" ", alpha0=0.0, beta0=0.0, theta=1.0)
    with pytest.raises(ValidationError):
        GateTarget(name="x", alpha0=0.0, beta0=4.0, theta=1.0)
    with pytest.raises(ValidationError):
        GateTarget(name="x", alpha0=0.0, beta0=0.0, theta=7.0)
    with pytest.raises(DomainError):
        preset_target("Toffoli")


def test_schedule_is_cyclic(hadamard_target):
    T = 6 * math.pi
    start = schedule(hadamard_target, T, 0.0)
    end = schedule(hadamard_target, T, T)
    assert start.alpha == pytest.approx(hadamard_target.alpha0)
    assert end.alpha == pytest.approx(hadamard_target.alpha0 + 2 * math.pi)
    assert end.beta == pytest.approx(hadamard_target.beta0)
    assert start.alpha_dot == 0.0 and start.beta_dot == 0.0


def test_schedule_rejects_bad_arguments(hadamard_target):
    with pytest.raises(DomainError):
        schedule(hadamard_target, 0.0, 0.0)
    with pytest.raises(DomainError):
        schedule(hadamard_target, 1.0, 1.5)
    unresolved = GateTarget(name="x", alpha0=0.0, beta0=0.0, theta=1.0)
    with pytest.raises(DomainError):
        schedule(unresolved, 1.0, 0.5)


def test_required_controls_vanish_at_start(hadamard_target):
    delta, amplitude, phase = required_controls(schedule(hadamard_target, 6 * math.pi, 0.0))
    assert delta == 0.0
    assert amplitude == 0.0
    assert phase is None


def test_solve_z_wq_inverts_renormalization():
    for omega_req, delta_req in [(0.05, 0.02), (0.2, -0.1), (0.3, 0.4)]:
        z, wq = solve_z_wq(omega_req, delta_req, 1.0)
        assert 0.0 <= z <= Z_MAX
        assert wq * bessel_j(1, z) == pytest.approx(omega_req, abs=1e-12)
        assert wq * bessel_j(0, z) - 1.0 == pytest.approx(delta_req, abs=1e-12)


def test_solve_z_wq_limits():
    assert solve_z_wq(0.0, 0.1, 1.0) == (0.0, 1.1)
    with pytest.raises(ValidityError):
        solve_z_wq(0.1, -1.5, 1.0)
    with pytest.raises(ValidityError):
        solve_z_wq(1.1 * MAX_RATIO, 0.0, 1.0)


def test_gate_time_index():
    assert gate_time_index(6 * math.pi, 1.0) == 6
    assert gate_time_index(4 * math.pi, 0.5) == 2
    with pytest.raises(DomainError):
        gate_time_index(6.0, 1.0)


def test_synthesis_rejects_too_few_samples(hadamard_target):
    with pytest.raises(DomainError):
        synthesize(hadamard_target, 6 * math.pi, n_samples=100)


def test_chrw_program_structure(chrw_hadamard):
    p = chrw_hadamard
    assert p.protocol == Protocol.CHRW
    assert p.n_samples == FAST_SAMPLES
    assert p.T == pytest.approx(6 * math.pi)
    assert np.all(p.z >= 0.0) and np.all(p.z <= Z_MAX)
    assert np.all(p.omega_q > 0.0)
    assert np.allclose(p.phi1, p.phi0 - math.pi / 2)
    assert np.allclose(p.omega1, 0.5 * np.gradient(p.z, p.times, edge_order=2))
    assert p.z[0] == 0.0 and p.omega_q[0] == pytest.approx(1.0)


def test_chrw_program_renormalization(chrw_hadamard):
    p = chrw_hadamard
    for k in range(0, p.n_samples, 97):
        assert p.omega_q[k] * bessel_j(1, p.z[k]) == pytest.approx(p.omega_eff[k], abs=1e-12)
        assert p.omega_q[k] * bessel_j(0, p.z[k]) - p.omega == pytest.approx(p.delta_eff[k], abs=1e-12)


def test_program_arrays_are_read_only(chrw_hadamard):
    with pytest.raises(ValueError):
        chrw_hadamard.omega0[0] = 1.0


def test_replace_revalidates(chrw_hadamard):
    with pytest.raises(ValidationError):
        chrw_hadamard.replace(omega_q=np.zeros(chrw_hadamard.n_samples))


def test_baseline_designs(hadamard_target, chrw_hadamard):
    T = 6 * math.pi
    rwa = synthesize_baseline(hadamard_target, T, Protocol.RWA, n_samples=FAST_SAMPLES)
    bs = synthesize_baseline(hadamard_target, T, Protocol.RWA_BS, n_samples=FAST_SAMPLES)
    assert np.allclose(rwa.omega0, 2 * chrw_hadamard.omega_eff)
    assert np.allclose(rwa.omega_q, 1.0 + chrw_hadamard.delta_eff)
    assert np.allclose(bs.omega_q, rwa.omega_q - rwa.omega0 ** 2 / 4.0)
    assert np.all(rwa.omega1 == 0.0)
    with pytest.raises(DomainError):
        synthesize_baseline(hadamard_target, T, Protocol.CHRW)


def test_design_program_dispatch(hadamard_target):
    for protocol in (Protocol.CHRW, Protocol.RWA_BS, Protocol.RWA):
        program = design_program(protocol, hadamard_target, 6 * math.pi, n_samples=FAST_SAMPLES)
        assert program.protocol == protocol
        assert program.target.name == Gate.HADAMARD


def test_short_hadamard_peak_drive(hadamard_target):
    program = synthesize(hadamard_target, 5 * math.pi, n_samples=FAST_SAMPLES)
    assert program.omega0.max() == pytest.approx(0.1974, rel=0.02)


def test_half_pi_tilt_phase_never_drops_below_pi():
    for lam in np.linspace(0.0, 2.0, 41):
        assert geometric_phase_integral(math.pi / 2, float(lam)) >= math.pi - 1e-10


def test_solve_z_wq_round_trip():
    for z_star in np.linspace(0.0, 1.0, 11):
        wq_star = 1.0 + 0.1 * z_star
        z, wq = solve_z_wq(wq_star * bessel_j(1, z_star), wq_star * bessel_j(0, z_star) - 1.0, 1.0)
        assert z == pytest.approx(z_star, abs=1e-9)
        assert wq == pytest.approx(wq_star, abs=1e-9)
