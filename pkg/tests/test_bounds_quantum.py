"""Quantum/private capacity bound tests."""

import numpy as np
import pytest
from scipy.optimize import minimize

from gadcap.bounds_quantum import (coherent_info_lb, dp_bounds, eps_adeg_ub,
                                   eps_close_deg_ubs, eps_deg_ubs, q_ad,
                                   q_rmg_ub, rains_ub, u_d)
from gadcap.channels import channel_from_choi, choi
from gadcap.gadc import (GadcParams, ThermalParams, degrading_channel_n0,
                         extended_channel, gadc_channel)
from gadcap.mathcore import entropy_vn


def test_q_ad_anchors():
    assert q_ad(0.0) == 1.0
    assert q_ad(0.5) == 0.0
    assert q_ad(0.9) == 0.0
    assert q_ad(0.25) == pytest.approx(0.4150, abs=1e-4)


def test_coherent_info_anchors():
    assert coherent_info_lb(GadcParams(0.0, 0.3)) == pytest.approx(1.0,
                                                                   abs=1e-9)
    for gamma in (0.5, 0.7, 1.0):
        assert coherent_info_lb(GadcParams(gamma, 0.25)) == 0.0


def test_coherent_info_matches_q_ad_at_n0():
    assert coherent_info_lb(GadcParams(0.25, 0.0)) == pytest.approx(
        q_ad(0.25), abs=1e-8)


def test_dp_bounds_substitutions():
    gamma = 0.3
    d1, d2, d3, d4 = dp_bounds(GadcParams(gamma, 0.0))
    assert d1 == pytest.approx(q_ad(gamma), abs=1e-10)
    assert d3 == 1.0  # q_ad(0)
    h1, h2_, h3, h4 = dp_bounds(GadcParams(gamma, 0.5))
    assert h1 == pytest.approx(h4, abs=1e-10)
    assert h2_ == pytest.approx(h3, abs=1e-10)


def test_dp_bounds_swap_under_population_reflection():
    a = dp_bounds(GadcParams(0.3, 0.2))
    b = dp_bounds(GadcParams(0.3, 0.8))
    assert a[0] == pytest.approx(b[3], abs=1e-10)
    assert a[1] == pytest.approx(b[2], abs=1e-10)


def test_u_d_equals_coherent_info_for_exactly_degradable():
    p = GadcParams(0.3, 0.0)
    val = u_d(gadc_channel(p), degrading_channel_n0(p), restarts=4)
    assert val == pytest.approx(q_ad(0.3), abs=1e-6)


def test_eps_deg_collapses_at_n0():
    q_ub, p_ub = eps_deg_ubs(GadcParams(0.3, 1e-6))
    assert q_ub == pytest.approx(q_ad(0.3), abs=1e-3)
    assert p_ub >= q_ub - 1e-12


def test_eps_close_deg_collapses_at_n0():
    q_ub, p_ub = eps_close_deg_ubs(GadcParams(0.3, 0.0))
    assert q_ub == pytest.approx(q_ad(0.3), abs=1e-6)
    assert p_ub >= q_ub - 1e-12


def test_eps_adeg_zero_in_antidegradable_region():
    for gamma in (0.5, 0.7, 1.0):
        assert eps_adeg_ub(GadcParams(gamma, 0.25)) <= 1e-5


def test_eps_adeg_positive_below_half():
    assert eps_adeg_ub(GadcParams(0.1, 0.1)) >= 1e-2


def test_rains_identity_and_eb_anchors():
    assert rains_ub(GadcParams(0.0, 0.3)) == pytest.approx(1.0, abs=1e-6)
    assert rains_ub(GadcParams(0.9, 0.5)) == pytest.approx(0.0, abs=1e-4)


def test_rains_below_dp_near_covariant_point():
    p = GadcParams(0.3, 0.5)
    r = rains_ub(p)
    assert all(r <= d + 1e-6 for d in dp_bounds(p))


def test_q_rmg_identity_limit():
    assert q_rmg_ub(ThermalParams(1.0, 0.3)) == pytest.approx(1.0, abs=1e-9)


def test_q_rmg_n0_fallback():
    assert q_rmg_ub(ThermalParams(0.7, 0.0)) == pytest.approx(q_ad(0.3),
                                                              abs=1e-10)


def test_q_rmg_dominates_dp1_spot():
    eta, n = 0.7, 0.01
    dp1 = dp_bounds(GadcParams(1.0 - eta, n))[0]
    assert dp1 <= q_rmg_ub(ThermalParams(eta, n)) + 1e-7


def test_q_rmg_diagonal_restriction():
    # full Bloch-ball optimization of the extended coherent information
    # agrees with the diagonal restriction
    from gadcap.bounds_quantum import _weak_complement_kraus

    for eta, n in [(0.6, 0.1), (0.75, 0.3), (0.9, 0.45), (0.55, 0.2),
                   (0.95, 0.05)]:
        t = ThermalParams(eta, n)
        ext = extended_channel(t)
        comp_ks = _weak_complement_kraus(ext)

        def ic_bloch(x):
            r = np.array(x)
            nr = np.linalg.norm(r)
            if nr > 1.0:
                r = r / nr
            rho = 0.5 * np.array([[1 + r[2], r[0] - 1j * r[1]],
                                  [r[0] + 1j * r[1], 1 - r[2]]])
            out = sum(k @ rho @ k.conj().T for k in ext.kraus)
            env = sum(k @ rho @ k.conj().T for k in comp_ks)
            return entropy_vn(out) - entropy_vn(env)

        best = -np.inf
        for x0 in ([0, 0, 0.4], [0.3, 0.2, -0.3], [0, 0, -0.8]):
            res = minimize(lambda x: -ic_bloch(x), x0, method="Nelder-Mead",
                           options={"xatol": 1e-9, "fatol": 1e-12,
                                    "maxiter": 3000})
            best = max(best, -res.fun)
        assert q_rmg_ub(t) == pytest.approx(max(best, 0.0), abs=1e-7)
