"""Tests for control-noise injection and robustness sweeps."""
import math

import numpy as np
import pytest
from pydantic import ValidationError

from app.constants import Gate, NoiseKind, NoiseTarget, Protocol
from app.errors import DomainError
from app.gatesim.fidelity import infidelity
from app.gatesim.propagation import effective_lab_propagator, exact_lab_propagator
from app.noise.injection import (
    apply_noise,
    apply_stochastic,
    apply_systematic,
    segment_offsets,
    trial_seed,
)
from app.noise.sweeps import noisy_infidelity, robustness_sweep
from app.schemas.noise import NoiseSpec

from tests.conftest import FAST_SAMPLES


def _systematic(rate, *targets):
    return NoiseSpec(kind=NoiseKind.SYSTEMATIC, rate=rate, targets=list(targets))


def _stochastic(rate, seed, *targets, segments=100):
    return NoiseSpec(kind=NoiseKind.STOCHASTIC, rate=rate, targets=list(targets),
                     segments=segments, seed=seed)


def test_spec_validation():
    with pytest.raises(ValidationError):
        NoiseSpec(kind="pink", rate=0.1, targets=[NoiseTarget.OMEGA0])
    with pytest.raises(ValidationError):
        NoiseSpec(kind=NoiseKind.SYSTEMATIC, rate=0.1, targets=[])
    with pytest.raises(ValidationError):
        NoiseSpec(kind=NoiseKind.SYSTEMATIC, rate=0.1, targets=["Omega2"])
    with pytest.raises(ValidationError):
        NoiseSpec(kind=NoiseKind.STOCHASTIC, rate=0.1, targets=[NoiseTarget.OMEGA0])
    with pytest.raises(ValidationError):
        _stochastic(-0.1, 1, NoiseTarget.OMEGA0)
    with pytest.raises(ValidationError):
        _systematic(-1.0, NoiseTarget.OMEGA0)


@pytest.mark.parametrize("rate", [0.51, -0.51])
def test_rate_bound_rejects(rate):
    with pytest.raises(ValidationError):
        _systematic(rate, NoiseTarget.OMEGA0)
    with pytest.raises(ValidationError):
        _stochastic(abs(rate), 1, NoiseTarget.OMEGA0)


@pytest.mark.parametrize("rate", [0.5, -0.5])
def test_rate_bound_is_inclusive(rate):
    assert _systematic(rate, NoiseTarget.OMEGA0).rate == rate
    assert _stochastic(abs(rate), 1, NoiseTarget.OMEGA0).rate == 0.5


def test_targets_are_sorted_and_unique():
    spec = _systematic(0.01, NoiseTarget.DELTA, NoiseTarget.OMEGA0, NoiseTarget.DELTA)
    assert spec.targets == sorted({NoiseTarget.DELTA, NoiseTarget.OMEGA0})
    assert spec.metadata()["noise_targets"] == "+".join(spec.targets)


def test_zero_systematic_noise_is_identity(chrw_hadamard):
    noisy = apply_systematic(chrw_hadamard, _systematic(0.0, NoiseTarget.OMEGA0, NoiseTarget.DELTA))
    assert np.array_equal(noisy.omega0, chrw_hadamard.omega0)
    assert np.array_equal(noisy.omega_q, chrw_hadamard.omega_q)


def test_zero_noise_infidelity_is_unchanged(chrw_hadamard):
    reference = effective_lab_propagator(Protocol.CHRW, chrw_hadamard)
    baseline = infidelity(reference, exact_lab_propagator(chrw_hadamard))
    spec = _systematic(0.0, NoiseTarget.OMEGA0)
    assert noisy_infidelity(chrw_hadamard, reference, spec) == baseline


def test_systematic_scaling(chrw_hadamard):
    before = chrw_hadamard.omega0.copy()
    noisy = apply_systematic(chrw_hadamard, _systematic(0.01, NoiseTarget.OMEGA0))
    assert np.allclose(noisy.omega0, 1.01 * before, rtol=1e-15, atol=0.0)
    assert np.array_equal(chrw_hadamard.omega0, before)
    assert np.array_equal(noisy.delta_eff, chrw_hadamard.delta_eff)


def test_systematic_composition(chrw_hadamard):
    d1, d2 = 0.01, -0.02
    twice = apply_systematic(apply_systematic(chrw_hadamard, _systematic(d1, NoiseTarget.OMEGA0)),
                             _systematic(d2, NoiseTarget.OMEGA0))
    once = apply_systematic(chrw_hadamard, _systematic((1 + d1) * (1 + d2) - 1, NoiseTarget.OMEGA0))
    assert np.allclose(twice.omega0, once.omega0, rtol=1e-12, atol=0.0)


def test_detuning_and_time_targets(chrw_hadamard):
    noisy = apply_systematic(chrw_hadamard, _systematic(0.05, NoiseTarget.DELTA))
    assert np.allclose(noisy.omega_q - 1.0, 1.05 * (chrw_hadamard.omega_q - 1.0))
    stretched = apply_systematic(chrw_hadamard, _systematic(0.02, NoiseTarget.TIME))
    assert stretched.T == pytest.approx(1.02 * chrw_hadamard.T)
    assert np.allclose(stretched.times, 1.02 * chrw_hadamard.times)


def test_wrong_kind_is_rejected(chrw_hadamard):
    with pytest.raises(DomainError):
        apply_systematic(chrw_hadamard, _stochastic(0.01, 1, NoiseTarget.OMEGA0))
    with pytest.raises(DomainError):
        apply_stochastic(chrw_hadamard, _systematic(0.01, NoiseTarget.OMEGA0))


def test_segment_offsets(chrw_hadamard):
    eps = 0.03
    offsets = segment_offsets(chrw_hadamard, np.random.default_rng(5), eps, 40)
    assert offsets.shape == chrw_hadamard.times.shape
    assert np.all(np.abs(offsets) <= eps)
    assert len(np.unique(offsets)) <= 40
    # piecewise constant: values change at most at segment boundaries
    assert np.count_nonzero(np.diff(offsets)) <= 39


def test_segment_offsets_are_centred(chrw_hadamard):
    eps = 0.1
    n = chrw_hadamard.n_samples
    # more segments than samples, so every sample sees its own draw
    offsets = segment_offsets(chrw_hadamard, np.random.default_rng(11), eps, 4 * n)
    assert len(np.unique(offsets)) == n
    assert abs(offsets.mean()) <= 3 * eps / math.sqrt(3 * n)
    assert np.var(offsets, ddof=1) == pytest.approx(eps ** 2 / 3, rel=0.08)


def test_stochastic_noise_is_reproducible(chrw_hadamard):
    a = apply_noise(chrw_hadamard, _stochastic(0.01, 42, NoiseTarget.OMEGA0, NoiseTarget.DELTA))
    b = apply_noise(chrw_hadamard, _stochastic(0.01, 42, NoiseTarget.OMEGA0, NoiseTarget.DELTA))
    c = apply_noise(chrw_hadamard, _stochastic(0.01, 43, NoiseTarget.OMEGA0, NoiseTarget.DELTA))
    assert np.array_equal(a.omega0, b.omega0)
    assert np.array_equal(a.omega_q, b.omega_q)
    assert not np.array_equal(a.omega0, c.omega0)


def test_zero_stochastic_noise_is_identity(chrw_hadamard):
    noisy = apply_noise(chrw_hadamard, _stochastic(0.0, 7, NoiseTarget.OMEGA0))
    assert np.array_equal(noisy.omega0, chrw_hadamard.omega0)


def test_trial_seed():
    assert trial_seed(20240521, 0) == 20240521
    assert trial_seed(20240521, 3) == 20240521 ^ 3
    assert len({trial_seed(99, k) for k in range(50)}) == 50


def test_robustness_sweep_rows():
    rows = robustness_sweep(Gate.HADAMARD, Protocol.CHRW, [0.0], NoiseKind.STOCHASTIC,
                            [NoiseTarget.OMEGA0], trials=2, T=6 * math.pi, seed=1, segments=10,
                            threads=1, n_samples=FAST_SAMPLES)
    assert len(rows) == 1
    row = rows[0]
    assert row["trials"] == 2
    assert row["T"] == pytest.approx(6 * math.pi)
    assert row["targets"] == NoiseTarget.OMEGA0
    assert row["kind"] == NoiseKind.STOCHASTIC
    assert 0.0 <= row["mean_infidelity"] < 1e-2
