"""Two-way assisted capacity bound tests."""

import numpy as np
import pytest

from gadcap.bounds_quantum import coherent_info_lb
from gadcap.bounds_twoway import (SquashedBoundConfig, bell_diagonal_state,
                                  closest_separable_state, cov_twoway_ub,
                                  er_bell_diagonal, esq_min, esq_objective,
                                  esq_ub, half_mi_ub, max_rains_analytic,
                                  reverse_coherent_lb, SEPARABILITY_GAMMA)
from gadcap.gadc import GadcParams, gadc_choi
from gadcap.mathcore import relative_entropy
from gadcap.sdp import emax_bits, rmax_bits


def test_rci_anchors():
    assert reverse_coherent_lb(GadcParams(0.0, 0.3)) == pytest.approx(
        1.0, abs=1e-9)
    # positive while the coherent information vanishes
    p = GadcParams(0.5, 0.0)
    assert coherent_info_lb(p) == 0.0
    assert reverse_coherent_lb(p) > 0.1


def test_rci_dominates_coherent_info():
    for gamma in (0.1, 0.3, 0.5, 0.7):
        for n in (0.0, 0.25, 0.5):
            p = GadcParams(gamma, n)
            assert reverse_coherent_lb(p) >= coherent_info_lb(p) - 1e-8


def test_half_mi_anchors():
    assert half_mi_ub(GadcParams(1e-9, 0.3)) == pytest.approx(1.0, abs=1e-6)
    assert half_mi_ub(GadcParams(1.0, 0.5)) == pytest.approx(0.0, abs=1e-9)


def test_esq_identity_squash_recovers_half_mi():
    for gamma, n in [(0.3, 0.2), (0.6, 0.4)]:
        p = GadcParams(gamma, n)
        cfg = SquashedBoundConfig(variant=1, squash=(0.0, 0.0, 0.0, 0.0))
        assert esq_ub(p, cfg) == pytest.approx(half_mi_ub(p), abs=1e-8)


def test_esq_below_half_mi():
    for gamma, n in [(0.2, 0.1), (0.5, 0.25), (0.8, 0.5)]:
        p = GadcParams(gamma, n)
        hm = half_mi_ub(p)
        assert esq_ub(p, SquashedBoundConfig(variant=1)) <= hm + 1e-6
        assert esq_ub(p, SquashedBoundConfig(variant=2)) <= hm + 1e-6


def test_esq_identity_channel():
    assert esq_ub(GadcParams(0.0, 0.3)) == pytest.approx(1.0, abs=1e-9)
    assert esq_ub(GadcParams(0.0, 0.3),
                  SquashedBoundConfig(variant=2)) == pytest.approx(1.0,
                                                                   abs=1e-9)


def test_esq_min_is_min_of_variants():
    p = GadcParams(0.5, 0.1)
    v1 = esq_ub(p, SquashedBoundConfig(variant=1))
    v2 = esq_ub(p, SquashedBoundConfig(variant=2))
    assert esq_min(p) == pytest.approx(min(v1, v2), abs=1e-12)


def test_esq_objective_nonnegative_and_smooth():
    p = GadcParams(0.4, 0.3)
    cfg = SquashedBoundConfig()
    xs = np.arange(0.0, 1.0 + 1e-12, 0.01)
    vals = np.array([esq_objective(p, cfg, x) for x in xs])
    assert vals.min() >= -1e-10
    steps = np.abs(np.diff(vals))
    # the maximand has infinite slope at the endpoints (x log x terms), so
    # the 0.05-per-step continuity budget applies to interior steps and a
    # slightly wider one to the first/last step
    assert steps[1:-1].max() <= 0.05
    assert max(steps[0], steps[-1]) <= 0.07


def test_config_validation():
    with pytest.raises(ValueError):
        SquashedBoundConfig(variant=3)
    with pytest.raises(ValueError):
        SquashedBoundConfig(squash=(1.5, 0.0, 0.5, 0.0))


def test_max_rains_anchors():
    assert max_rains_analytic(GadcParams(0.0, 0.3)) == 1.0
    assert max_rains_analytic(GadcParams(0.5, 0.0)) == pytest.approx(
        np.log2(1.5), abs=1e-12)
    assert max_rains_analytic(GadcParams(0.9, 0.5)) == 0.0


def test_max_rains_symmetric():
    a = max_rains_analytic(GadcParams(0.4, 0.2))
    b = max_rains_analytic(GadcParams(0.4, 0.8))
    assert a == b


def test_max_rains_matches_sdps():
    for gamma, n in [(0.2, 0.0), (0.5, 0.25), (0.85, 0.5)]:
        p = GadcParams(gamma, n)
        expect = max_rains_analytic(p)
        assert rmax_bits(gadc_choi(p)) == pytest.approx(expect, abs=1e-6)
        assert emax_bits(gadc_choi(p)) == pytest.approx(expect, abs=1e-6)


def test_er_bell_diagonal_anchors():
    assert er_bell_diagonal(0.0) == 1.0
    assert er_bell_diagonal(SEPARABILITY_GAMMA) == 0.0
    assert er_bell_diagonal(0.9) == 0.0


def test_er_matches_relative_entropy_oracle():
    for gamma in (0.1, 0.4, 0.7):
        direct = relative_entropy(bell_diagonal_state(gamma),
                                  closest_separable_state(gamma))
        assert er_bell_diagonal(gamma) == pytest.approx(direct, abs=1e-10)


def test_cov_collapses_at_half():
    for gamma in (0.2, 0.5):
        assert cov_twoway_ub(GadcParams(gamma, 0.5)) == pytest.approx(
            er_bell_diagonal(gamma), abs=1e-15)
    assert cov_twoway_ub(GadcParams(0.9, 0.5)) == 0.0


def test_cov_tightest_at_low_gamma_covariant_point():
    p = GadcParams(0.2, 0.5)
    cov = cov_twoway_ub(p)
    others = [half_mi_ub(p), esq_ub(p, SquashedBoundConfig(variant=1)),
              esq_ub(p, SquashedBoundConfig(variant=2)),
              max_rains_analytic(p)]
    assert all(cov <= o + 1e-9 for o in others)
