"""Unit tests for channel/Choi plumbing."""

import numpy as np
import pytest

from gadcap.channels import (QuantumChannel, apply, channel_from_choi, choi,
                             complementary, compose, identity_channel,
                             isometric_extension, pauli_twirl,
                             tensor_channels)
from gadcap.gadc import GadcParams, gadc_channel, gadc_choi
from gadcap.mathcore import partial_trace


def random_density(rng, d=2):
    a = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    rho = a @ a.conj().T
    return rho / np.trace(rho).real


def test_choi_matches_closed_form():
    for gamma, n in [(0.0, 0.0), (0.3, 0.25), (0.7, 0.5), (1.0, 1.0)]:
        p = GadcParams(gamma, n)
        got = choi(gadc_channel(p)).gamma
        assert np.abs(got - gadc_choi(p).gamma).max() < 1e-12


def test_channel_from_choi_round_trip():
    rng = np.random.default_rng(3)
    p = GadcParams(0.4, 0.3)
    ch = channel_from_choi(gadc_choi(p))
    ref = gadc_channel(p)
    for _ in range(5):
        rho = random_density(rng)
        assert np.abs(apply(ch, rho) - apply(ref, rho)).max() < 1e-10


def test_isometric_extension_is_isometry():
    ch = gadc_channel(GadcParams(0.35, 0.2))
    v = isometric_extension(ch)
    assert np.abs(v.conj().T @ v - np.eye(2)).max() < 1e-12


def test_complementary_traces_out_output():
    rng = np.random.default_rng(4)
    ch = gadc_channel(GadcParams(0.35, 0.2))
    v = isometric_extension(ch)
    comp = complementary(ch)
    rho = random_density(rng)
    full = v @ rho @ v.conj().T
    env = partial_trace(full, (2, len(ch.kraus)), (1,))
    assert np.abs(env - apply(comp, rho)).max() < 1e-12


def test_compose_matches_sequential_application():
    rng = np.random.default_rng(5)
    c1 = gadc_channel(GadcParams(0.3, 0.0))
    c2 = gadc_channel(GadcParams(0.2, 1.0))
    both = compose(c2, c1)
    rho = random_density(rng)
    assert np.abs(apply(both, rho) - apply(c2, apply(c1, rho))).max() < 1e-12


def test_identity_channel():
    rng = np.random.default_rng(6)
    rho = random_density(rng)
    assert np.abs(apply(identity_channel(2), rho) - rho).max() < 1e-15


def test_pauli_twirl_of_gadc_is_covariant_channel():
    p = GadcParams(0.4, 0.2)
    tw = pauli_twirl(gadc_channel(p))
    expect = gadc_choi(GadcParams(0.4, 0.5)).gamma
    assert np.abs(choi(tw).gamma - expect).max() < 1e-10


def test_tensor_channels_dims():
    c = tensor_channels(gadc_channel(GadcParams(0.3, 0.0)),
                        identity_channel(2))
    assert c.din == 4 and c.dout == 4
    rho = np.eye(4) / 4
    assert np.isclose(np.trace(apply(c, rho)), 1.0)


def test_trace_preservation_validation():
    bad = [np.eye(2)]  # sum K^dag K = I is fine; make it bad
    bad = [np.eye(2) * 0.5]
    with pytest.raises(ValueError):
        QuantumChannel(bad)
