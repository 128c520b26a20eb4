"""Structural tests for the generalized amplitude damping channel."""

import numpy as np
import pytest

from gadcap.channels import apply, choi, complementary, compose
from gadcap.gadc import (GadcParams, ThermalParams, antidegrading_channel,
                         bloch_image, compose_params, convex_decompose,
                         degrading_channel_n0, eb_margin, estar_channel,
                         extended_channel, extended_degrading_channel,
                         gadc_channel, gadc_choi, gadc_complement,
                         is_antidegradable, is_entanglement_breaking,
                         kraus_operators, phase_damping_channel,
                         serial_decompose, thermal_channel,
                         two_extendability_quantities)
from gadcap.mathcore import PAULI_X, PAULI_Y, PAULI_Z, partial_trace, \
    partial_transpose

GRID = [(g / 10, n) for g in range(11) for n in (0.0, 0.25, 0.5, 0.75, 1.0)]


def test_kraus_completeness():
    for gamma, n in GRID:
        ks = kraus_operators(GadcParams(gamma, n))
        total = sum(k.conj().T @ k for k in ks)
        assert np.abs(total - np.eye(2)).max() < 1e-12


def test_choi_closed_form_psd_unit_trace():
    for gamma, n in GRID:
        state = gadc_choi(GadcParams(gamma, n)).state
        assert np.isclose(np.trace(state), 1.0)
        assert np.linalg.eigvalsh(state).min() > -1e-12


def test_bloch_image_matches_channel():
    rng = np.random.default_rng(7)
    for gamma, n in [(0.3, 0.2), (0.8, 0.7)]:
        p = GadcParams(gamma, n)
        r = rng.uniform(-0.5, 0.5, 3)
        rho = 0.5 * (np.eye(2) + r[0] * PAULI_X + r[1] * PAULI_Y
                     + r[2] * PAULI_Z)
        out = apply(gadc_channel(p), rho)
        rp = bloch_image(p, r)
        expect = 0.5 * (np.eye(2) + rp[0] * PAULI_X + rp[1] * PAULI_Y
                        + rp[2] * PAULI_Z)
        assert np.abs(out - expect).max() < 1e-12


def test_convex_decomposition_choi_identity():
    for gamma, n in GRID:
        p = GadcParams(gamma, n)
        w, p0, p1 = convex_decompose(p)
        mix = (1 - w) * gadc_choi(p0).gamma + w * gadc_choi(p1).gamma
        assert np.abs(mix - gadc_choi(p).gamma).max() < 1e-12


def test_serial_decompositions_choi_identity():
    for gamma, n in GRID:
        p = GadcParams(gamma, n)
        for outer, inner in serial_decompose(p):
            got = choi(compose(gadc_channel(outer),
                               gadc_channel(inner))).gamma
            assert np.abs(got - gadc_choi(p).gamma).max() < 1e-12


def test_compose_params_matches_choi_composition():
    p1 = GadcParams(0.3, 0.2)
    p2 = GadcParams(0.4, 0.7)
    pc = compose_params(p2, p1)
    got = choi(compose(gadc_channel(p2), gadc_channel(p1))).gamma
    assert np.abs(got - gadc_choi(pc).gamma).max() < 1e-12


def test_eb_margin_is_det_of_partial_transpose():
    rng = np.random.default_rng(8)
    for _ in range(200):
        p = GadcParams(rng.uniform(), rng.uniform())
        pt = partial_transpose(gadc_choi(p).state, (2, 2), 1)
        assert eb_margin(p) == pytest.approx(np.linalg.det(pt), abs=1e-12)


def test_eb_predicate_examples():
    assert is_entanglement_breaking(GadcParams(0.9, 0.5))[0]
    assert not is_entanglement_breaking(GadcParams(0.5, 0.5))[0]
    assert not is_entanglement_breaking(GadcParams(0.9, 0.0))[0]


def test_antidegradable_iff_gamma_at_least_half():
    for gamma, n in GRID:
        flag, _ = is_antidegradable(GadcParams(gamma, n))
        assert flag == (gamma >= 0.5)


def test_two_extendability_closed_forms():
    for gamma, n in [(0.3, 0.2), (0.6, 0.4), (0.9, 0.9)]:
        pur_ab, pur_b, det = two_extendability_quantities(
            GadcParams(gamma, n))
        assert pur_ab == pytest.approx(
            gamma**2 * n**2 - gamma**2 * n + gamma**2 / 2 - gamma + 1,
            abs=1e-12)
        assert pur_b == pytest.approx(
            2 * gamma**2 * n**2 - 2 * gamma**2 * n + gamma**2 / 2 + 0.5,
            abs=1e-12)
        assert det == pytest.approx(
            gamma**4 * n**2 * (1 - n)**2 / 16, abs=1e-12)


def test_estar_relates_complement_to_reflected_channel():
    for gamma, n in [(0.2, 0.3), (0.6, 0.8)]:
        p = GadcParams(gamma, n)
        got = choi(compose(estar_channel(), gadc_complement(p))).gamma
        expect = gadc_choi(GadcParams(1.0 - gamma, n)).gamma
        assert np.abs(got - expect).max() < 1e-12


def test_antidegrading_identity():
    for gamma in (0.5, 0.7, 0.95):
        for n in (0.0, 0.3, 0.5):
            p = GadcParams(gamma, n)
            got = choi(compose(antidegrading_channel(p),
                               gadc_complement(p))).gamma
            assert np.abs(got - gadc_choi(p).gamma).max() < 1e-12


def test_degrading_identity_n0():
    for gamma in (0.1, 0.3, 0.45):
        p = GadcParams(gamma, 0.0)
        got = choi(compose(degrading_channel_n0(p), gadc_channel(p))).gamma
        comp = choi(complementary(gadc_channel(p))).gamma
        assert np.abs(got - comp).max() < 1e-12


def test_thermal_channel_reparameterization():
    t = ThermalParams(0.7, 0.3)
    got = choi(thermal_channel(t)).gamma
    expect = gadc_choi(GadcParams(1.0 - t.eta, t.n)).gamma
    assert np.abs(got - expect).max() < 1e-12


def test_extended_channel_marginal():
    for eta, n in [(0.55, 0.1), (0.7, 0.3), (0.9, 0.5)]:
        t = ThermalParams(eta, n)
        marg = partial_trace(choi(extended_channel(t)).gamma,
                             (2, 2, 2), (0, 1))
        base = choi(gadc_channel(GadcParams(1.0 - eta, n))).gamma
        assert np.abs(marg - base).max() < 1e-12


def test_extended_degrading_identity():
    for eta, n in [(0.55, 0.1), (0.7, 0.3), (0.9, 0.5)]:
        t = ThermalParams(eta, n)
        ext = extended_channel(t)
        got = choi(compose(extended_degrading_channel(t), ext)).gamma
        comp = choi(complementary(ext)).gamma
        assert np.abs(got - comp).max() < 1e-12


def test_phase_damping_multiplies_coherences():
    rho = np.array([[0.6, 0.3], [0.3, 0.4]], dtype=complex)
    out = apply(phase_damping_channel(0.25), rho)
    assert out[0, 1] == pytest.approx(0.3 * 0.25, abs=1e-12)
    assert out[0, 0] == pytest.approx(0.6, abs=1e-12)


def test_param_validation():
    with pytest.raises(ValueError):
        GadcParams(-0.1, 0.5)
    with pytest.raises(ValueError):
        GadcParams(0.5, 1.5)
